#include "higgsgrass/varset.hpp"

#include "higgsgrass/errors.hpp"

#include <cctype>

namespace higgsgrass {

bool VarSet::valid_name(std::string_view name) {
    if (name.empty()) return false;
    auto head = static_cast<unsigned char>(name[0]);
    if (!std::isalpha(head) && name[0] != '_') return false;
    for (char c : name.substr(1)) {
        auto u = static_cast<unsigned char>(c);
        if (!std::isalnum(u) && c != '_') return false;
    }
    return true;
}

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
    index_.reserve(names_.size());
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!valid_name(names_[i]))
            throw DomainError("invalid variable name: '" + names_[i] + "'");
        if (!index_.emplace(names_[i], i).second)
            throw DomainError("duplicate variable name: '" + names_[i] + "'");
    }
}

VarSetPtr VarSet::make(std::vector<std::string> names) {
    return VarSetPtr(new VarSet(std::move(names)));
}

VarSetPtr VarSet::extend(const VarSetPtr& base, const std::vector<std::string>& extra) {
    std::vector<std::string> names = base ? base->names_ : std::vector<std::string>{};
    names.insert(names.end(), extra.begin(), extra.end());
    return make(std::move(names));
}

std::optional<std::size_t> VarSet::index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

} // namespace higgsgrass
