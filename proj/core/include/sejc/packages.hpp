#ifndef SEJC_PACKAGES_HPP
#define SEJC_PACKAGES_HPP

#include "sejc/value.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace sejc {

// The set of known packages and their import lists. Always contains the
// built-ins: "COMMON-LISP" and "KEYWORD" (no imports) and "ACL2", which
// imports t, nil, and the built-in function and form names from
// "COMMON-LISP". User packages are added by defpackage forms, in order,
// before any symbol mentions them.
class PackageTable {
public:
    PackageTable();

    bool known(const std::string& name) const;

    // Adds a package. Throws WorkspaceError when the name is empty or
    // already defined, or when two imports share a symbol name.
    void define(const std::string& name, std::vector<Symbol> imports);

    // Import resolution: a mention of `name` qualified by package `pkg`
    // denotes the imported symbol when `pkg` imports one with that name,
    // and (pkg, name) otherwise. pkg must be known.
    Symbol intern(const std::string& pkg, const std::string& name) const;

    const std::vector<Symbol>& imports_of(const std::string& name) const;

    // All package names in definition order, built-ins first.
    const std::vector<std::string>& names() const { return order_; }

private:
    std::vector<std::string> order_;
    std::unordered_map<std::string, std::vector<Symbol>> imports_;
};

} // namespace sejc

#endif
