#include "condsym/symbols.hpp"

#include <stdexcept>
#include <unordered_map>

namespace condsym {

namespace {
std::unordered_map<std::string, Sym>& index_map() {
    static std::unordered_map<std::string, Sym> m;
    return m;
}
} // namespace

SymTab& SymTab::instance() {
    static SymTab tab;
    return tab;
}

SymTab::SymTab() {
    auto reg = [this](const std::string& n, SymKind k, int idx) {
        names_.push_back(n);
        kinds_.push_back(k);
        index_.push_back(idx);
        index_map()[n] = static_cast<Sym>(names_.size() - 1);
    };
    for (int i = 0; i <= 9; ++i) reg("x" + std::to_string(i), SymKind::Coordinate, i);
    for (int a = 1; a <= 9; ++a) reg("w" + std::to_string(a), SymKind::Invariant, a);
    reg("w", SymKind::Radial, 0);
    reg("u", SymKind::Function, 0);
    reg("phi", SymKind::Function, 0);
    reg("psi", SymKind::Function, 0);
    reg("F", SymKind::Function, 0);
    reg("alpha", SymKind::Parameter, 0);
    reg("n", SymKind::Parameter, 0);
    reg("beta", SymKind::Parameter, 0);
    reg("lambda", SymKind::Parameter, 0);
    reg("k", SymKind::Parameter, 0);
    for (int a = 1; a <= 9; ++a) reg("m" + std::to_string(a), SymKind::Parameter, a);
    for (int i = 1; i <= 3; ++i) reg("c" + std::to_string(i), SymKind::Parameter, i);
    for (int i = 0; i <= 9; ++i) reg("theta" + std::to_string(i), SymKind::Parameter, i);
}

Sym SymTab::intern(const std::string& name, SymKind kind) {
    auto it = index_map().find(name);
    if (it != index_map().end()) return it->second;
    names_.push_back(name);
    kinds_.push_back(kind);
    index_.push_back(0);
    Sym id = static_cast<Sym>(names_.size() - 1);
    index_map()[name] = id;
    return id;
}

int SymTab::lookup(const std::string& name) const {
    auto it = index_map().find(name);
    return it == index_map().end() ? -1 : static_cast<int>(it->second);
}

namespace sym {

Sym coord(int i) {
    if (i < 0 || i > 9) throw std::out_of_range("coordinate index out of range");
    return static_cast<Sym>(i);
}
Sym invariant(int a) {
    if (a < 1 || a > 9) throw std::out_of_range("invariant index out of range");
    return static_cast<Sym>(10 + a - 1);
}
Sym radial() { return 19; }
Sym u() { return 20; }
Sym phi() { return 21; }
Sym psi() { return 22; }
Sym bigF() { return 23; }
Sym alpha() { return 24; }
Sym nparam() { return 25; }
Sym beta() { return 26; }
Sym lambda() { return 27; }
Sym kparam() { return 28; }
Sym m(int a) {
    if (a < 1 || a > 9) throw std::out_of_range("m index out of range");
    return static_cast<Sym>(29 + a - 1);
}
Sym c(int i) {
    if (i < 1 || i > 3) throw std::out_of_range("c index out of range");
    return static_cast<Sym>(38 + i - 1);
}
Sym theta(int i) {
    if (i < 0 || i > 9) throw std::out_of_range("theta index out of range");
    return static_cast<Sym>(41 + i);
}

} // namespace sym
} // namespace condsym
