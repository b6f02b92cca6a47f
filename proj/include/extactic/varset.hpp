#pragma once

#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace extactic {

// Ordered list of symbol names fixed per computation context.  Immutable;
// polynomials share one instance through shared_ptr and compare by value so
// that separately parsed inputs interoperate.
class VarSet {
public:
    explicit VarSet(std::vector<std::string> names) : names_(std::move(names)) {}

    static std::shared_ptr<const VarSet> make(std::vector<std::string> names) {
        return std::make_shared<const VarSet>(std::move(names));
    }
    static std::shared_ptr<const VarSet> make(std::initializer_list<const char*> names) {
        std::vector<std::string> v(names.begin(), names.end());
        return std::make_shared<const VarSet>(std::move(v));
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<std::size_t> index(const std::string& name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        return std::nullopt;
    }

    bool operator==(const VarSet& other) const { return names_ == other.names_; }
    bool operator!=(const VarSet& other) const { return !(*this == other); }

private:
    std::vector<std::string> names_;
};

using VarsPtr = std::shared_ptr<const VarSet>;

inline bool same_vars(const VarsPtr& a, const VarsPtr& b) {
    return a == b || (a && b && *a == *b);
}

} // namespace extactic
