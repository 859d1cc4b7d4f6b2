#include "sejc/packages.hpp"

#include "sejc/diagnostics.hpp"

#include <algorithm>

namespace sejc {

PackageTable::PackageTable() {
    order_ = {"COMMON-LISP", "KEYWORD", "ACL2"};
    imports_["COMMON-LISP"] = {};
    imports_["KEYWORD"] = {};
    std::vector<Symbol> acl2;
    for (const auto& n : builtin_common_lisp_names())
        acl2.push_back(Symbol{"COMMON-LISP", n});
    imports_["ACL2"] = std::move(acl2);
}

bool PackageTable::known(const std::string& name) const {
    return imports_.count(name) > 0;
}

void PackageTable::define(const std::string& name, std::vector<Symbol> imports) {
    if (name.empty())
        throw WorkspaceError("package name must be non-empty");
    if (known(name))
        throw WorkspaceError("package \"" + name + "\" is already defined");
    for (std::size_t i = 0; i < imports.size(); ++i)
        for (std::size_t j = i + 1; j < imports.size(); ++j)
            if (imports[i].name == imports[j].name)
                throw WorkspaceError("package \"" + name +
                                     "\" imports two symbols named " +
                                     imports[i].name);
    order_.push_back(name);
    imports_[name] = std::move(imports);
}

Symbol PackageTable::intern(const std::string& pkg, const std::string& name) const {
    const auto& imported = imports_of(pkg);
    for (const Symbol& s : imported)
        if (s.name == name) return s;
    return Symbol{pkg, name};
}

const std::vector<Symbol>& PackageTable::imports_of(const std::string& name) const {
    auto it = imports_.find(name);
    if (it == imports_.end())
        throw WorkspaceError("unknown package \"" + name + "\"");
    return it->second;
}

} // namespace sejc
