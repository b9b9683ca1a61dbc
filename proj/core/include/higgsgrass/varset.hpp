#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace higgsgrass {

class VarSet;
using VarSetPtr = std::shared_ptr<const VarSet>;

/// Ordered set of distinct variable names. Names must match
/// [a-zA-Z_][a-zA-Z0-9_]*. Shared immutably by every polynomial over it.
class VarSet {
public:
    static VarSetPtr make(std::vector<std::string> names);

    /// New set with `extra` appended (duplicates rejected).
    static VarSetPtr extend(const VarSetPtr& base, const std::vector<std::string>& extra);

    static bool valid_name(std::string_view name);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<std::size_t> index_of(std::string_view name) const;
    bool contains(std::string_view name) const { return index_of(name).has_value(); }

    friend bool operator==(const VarSet& a, const VarSet& b) { return a.names_ == b.names_; }
    friend bool operator!=(const VarSet& a, const VarSet& b) { return !(a == b); }

private:
    explicit VarSet(std::vector<std::string> names);

    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
};

inline bool same_vars(const VarSetPtr& a, const VarSetPtr& b) {
    return a == b || (a && b && *a == *b);
}

} // namespace higgsgrass
