#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace condsym {

using Sym = std::uint16_t;

enum class SymKind : std::uint8_t {
    Coordinate,  // x0..x9
    Invariant,   // w1..w9
    Radial,      // w (the scalar invariant of the projected ODEs)
    Parameter,   // alpha, n, beta, m1.., c1.., lambda, k, ...
    Function,    // phi, psi, u, F, ... (names usable in applications)
};

// Global interned symbol table. The parser accepts exactly the declared
// names; code may intern additional parameter/function names (e.g. "beta",
// "theta0") that never appear in parsed text.
class SymTab {
public:
    static SymTab& instance();

    Sym intern(const std::string& name, SymKind kind);
    // Returns the id if `name` is registered, -1 otherwise.
    int lookup(const std::string& name) const;

    const std::string& name(Sym s) const { return names_[s]; }
    SymKind kind(Sym s) const { return kinds_[s]; }
    // Coordinate index of x_i, or invariant index of w_a.
    int index(Sym s) const { return index_[s]; }

    std::size_t size() const { return names_.size(); }

private:
    SymTab();
    std::vector<std::string> names_;
    std::vector<SymKind> kinds_;
    std::vector<int> index_;
};

// Shorthands for the fixed vocabulary.
namespace sym {
Sym coord(int i);          // x_i, 0 <= i <= 9
Sym invariant(int a);      // w_a, 1 <= a <= 9
Sym radial();              // w
Sym u();                   // the field, used as a Function name
Sym phi();
Sym psi();
Sym bigF();                // opaque nonlinearity symbol F
Sym alpha();
Sym nparam();
Sym beta();
Sym lambda();
Sym kparam();
Sym m(int a);              // m1..m9
Sym c(int i);              // c1..c3
Sym theta(int i);          // internal op1 helper symbols theta0..theta9
} // namespace sym

} // namespace condsym
