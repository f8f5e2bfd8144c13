#include "polycert/symbols.hpp"

namespace polycert {

SymbolId SymbolTable::insert(SymbolInfo info) {
    if (by_name_.count(info.name))
        throw std::invalid_argument("symbol already declared: " + info.name);
    SymbolId id = static_cast<SymbolId>(infos_.size());
    by_name_.emplace(info.name, id);
    infos_.push_back(std::move(info));
    return id;
}

SymbolId SymbolTable::add_state(const std::string& name) {
    if (n_inputs_ > 0)
        throw std::logic_error("states must be declared before inputs");
    SymbolInfo info;
    info.name = name;
    info.role = SymbolRole::State;
    info.position = ++n_states_;
    SymbolId id = insert(std::move(info));
    by_position_.push_back(id);
    return id;
}

SymbolId SymbolTable::add_input(const std::string& name) {
    SymbolInfo info;
    info.name = name;
    info.role = SymbolRole::Input;
    info.position = n_states_ + (++n_inputs_);
    SymbolId id = insert(std::move(info));
    by_position_.push_back(id);
    return id;
}

SymbolId SymbolTable::add_plant_constant(const std::string& name) {
    SymbolInfo info;
    info.name = name;
    info.role = SymbolRole::PlantConst;
    return insert(std::move(info));
}

std::string SymbolTable::w_param_name(int sigma, int rho, int iter) {
    return "W_" + std::to_string(sigma) + "_" + std::to_string(rho) + "_" +
           std::to_string(iter);
}

SymbolId SymbolTable::add_w_param(int sigma, int rho, int iter) {
    std::string name = w_param_name(sigma, rho, iter);
    if (auto existing = lookup(name)) return *existing;
    SymbolInfo info;
    info.name = name;
    info.role = SymbolRole::WParam;
    info.windex = {sigma, rho, iter};
    return insert(std::move(info));
}

SymbolId SymbolTable::add_feedback_param(const std::string& name, int input, int slot) {
    SymbolInfo info;
    info.name = name;
    info.role = SymbolRole::FeedbackParam;
    info.fb_input = input;
    info.fb_slot = slot;
    return insert(std::move(info));
}

SymbolId SymbolTable::add_free_symbol(const std::string& name) {
    SymbolInfo info;
    info.name = name;
    info.role = SymbolRole::PlantConst;
    return insert(std::move(info));
}

std::optional<SymbolId> SymbolTable::lookup(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

SymbolId SymbolTable::require(const std::string& name) const {
    auto id = lookup(name);
    if (!id) throw std::invalid_argument("unknown symbol: " + name);
    return *id;
}

SymbolId SymbolTable::variable_at(int position) const {
    if (position < 1 || position > static_cast<int>(by_position_.size()))
        throw std::out_of_range("no variable at position " + std::to_string(position));
    return by_position_[static_cast<std::size_t>(position - 1)];
}

}  // namespace polycert
