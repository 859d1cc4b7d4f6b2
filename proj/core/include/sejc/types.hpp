#ifndef SEJC_TYPES_HPP
#define SEJC_TYPES_HPP

#include "sejc/value.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sejc {

// Source-level types forming a finite partial order:
//   AINTEGER <= ARATIONAL <= ANUMBER <= AVALUE
//   ACONS <= AVALUE
//   ABOOLEAN <= ASYMBOL <= AVALUE
//   ACHARACTER <= AVALUE, ASTRING <= AVALUE
//   JINT comparable only to itself
enum class SrcType : std::uint8_t {
    AVALUE,
    ANUMBER,
    ARATIONAL,
    AINTEGER,
    ACONS,
    ASYMBOL,
    ABOOLEAN,
    ACHARACTER,
    ASTRING,
    JINT,
};

constexpr std::array<SrcType, 10> kAllSrcTypes = {
    SrcType::AVALUE,    SrcType::ANUMBER,  SrcType::ARATIONAL,
    SrcType::AINTEGER,  SrcType::ACONS,    SrcType::ASYMBOL,
    SrcType::ABOOLEAN,  SrcType::ACHARACTER, SrcType::ASTRING,
    SrcType::JINT,
};

// ":ainteger"-style keyword used in directives and diagnostics.
std::string type_keyword(SrcType t);
// Two-letter display code used by the annotated-term renderer.
std::string type_code(SrcType t);
// Parses the name part of a type keyword ("AINTEGER" -> AINTEGER).
std::optional<SrcType> type_from_keyword_name(const std::string& name);

bool type_leq(SrcType a, SrcType b);
std::optional<SrcType> type_glb(SrcType a, SrcType b);
std::optional<SrcType> type_lub(SrcType a, SrcType b);
bool value_has_type(const Value& v, SrcType t);

// Most specific type inhabited by a value (booleans are ABOOLEAN before
// ASYMBOL, integers AINTEGER before ARATIONAL).
SrcType most_specific_type(const Value& v);

// Result type of a term: one part for single values, several for a
// multiple-value result. Tuples never nest.
struct ResultType {
    std::vector<SrcType> parts;

    ResultType() = default;
    ResultType(SrcType t) : parts{t} {}
    explicit ResultType(std::vector<SrcType> ts) : parts(std::move(ts)) {}

    bool scalar() const { return parts.size() == 1; }
    SrcType single() const { return parts.at(0); }
    bool operator==(const ResultType&) const = default;
};

std::string result_type_code(const ResultType& t);

// Pointwise extensions used on result types; mixed scalar/tuple or
// mismatched lengths are incomparable.
bool result_leq(const ResultType& a, const ResultType& b);
std::optional<ResultType> result_lub(const ResultType& a, const ResultType& b);
// Comparable either way round, pointwise: the legality test for conversions.
bool result_convertible(const ResultType& from, const ResultType& to);

// A function type: input types (always scalars) and one or more outputs.
struct FnType {
    std::vector<SrcType> inputs;
    std::vector<SrcType> outputs;

    bool operator==(const FnType&) const = default;
};

std::string fn_type_string(const FnType& t);

} // namespace sejc

#endif
