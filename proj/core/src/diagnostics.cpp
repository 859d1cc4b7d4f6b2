#include "sejc/diagnostics.hpp"

#include <sstream>

namespace sejc {

std::string phase_name(Phase p) {
    switch (p) {
    case Phase::Read: return "read";
    case Phase::Workspace: return "workspace";
    case Phase::PreTranslation: return "pre-translation";
    case Phase::Translation: return "translation";
    case Phase::PostTranslation: return "post-translation";
    case Phase::Interpretation: return "interpretation";
    case Phase::Execution: return "execution";
    case Phase::TestGen: return "test generation";
    }
    return "?";
}

namespace {
std::string format_message(Phase phase, const std::string& message, SourcePos pos) {
    std::ostringstream os;
    os << phase_name(phase) << ": ";
    if (pos.line > 0) os << "line " << pos.line << ", column " << pos.col << ": ";
    os << message;
    return os.str();
}
} // namespace

Error::Error(Phase phase, const std::string& message, SourcePos pos)
    : std::runtime_error(format_message(phase, message, pos)),
      phase_(phase),
      pos_(pos),
      raw_(message) {}

} // namespace sejc
