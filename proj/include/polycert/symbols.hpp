#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace polycert {

using SymbolId = std::uint32_t;

enum class SymbolRole {
    State,          // x_1 ... x_n, carries a variable position
    Input,          // u_1 ... u_m, carries a variable position above the states
    WParam,         // undetermined parameter minted during factorization
    FeedbackParam,  // coefficient of a parametric feedback law
    PlantConst,     // named constant of the controlled system, never solved for
};

struct SymbolInfo {
    std::string name;
    SymbolRole role;
    // States and inputs: 1-based variable position (inputs sit above all states).
    int position = 0;
    // WParam: (sigma, rho, iteration).
    std::array<int, 3> windex{0, 0, 0};
    // FeedbackParam: 1-based input index and template slot.
    int fb_input = 0;
    int fb_slot = 0;
};

// Session-scoped registry. Names are unique; roles are immutable after creation.
class SymbolTable {
public:
    SymbolId add_state(const std::string& name);
    SymbolId add_input(const std::string& name);
    SymbolId add_plant_constant(const std::string& name);
    // Mints W_{sigma,rho,iter}; returns the existing id if already minted.
    SymbolId add_w_param(int sigma, int rho, int iter);
    SymbolId add_feedback_param(const std::string& name, int input, int slot);
    // Free re-parameterization symbols used as rule values.
    SymbolId add_free_symbol(const std::string& name);

    std::optional<SymbolId> lookup(const std::string& name) const;
    SymbolId require(const std::string& name) const;

    const SymbolInfo& info(SymbolId id) const { return infos_.at(id); }
    const std::string& name(SymbolId id) const { return infos_.at(id).name; }
    SymbolRole role(SymbolId id) const { return infos_.at(id).role; }

    int n_states() const { return n_states_; }
    int n_inputs() const { return n_inputs_; }
    // Variable (state or input) occupying the given 1-based position.
    SymbolId variable_at(int position) const;
    std::size_t size() const { return infos_.size(); }

    static std::string w_param_name(int sigma, int rho, int iter);

private:
    SymbolId insert(SymbolInfo info);

    std::vector<SymbolInfo> infos_;
    std::unordered_map<std::string, SymbolId> by_name_;
    std::vector<SymbolId> by_position_;
    int n_states_ = 0;
    int n_inputs_ = 0;
};

}  // namespace polycert
