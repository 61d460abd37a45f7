#pragma once

#include <string>
#include <vector>

namespace tc {

// A variable of the coefficient field: either a coordinate u^i or a jet
// symbol f^i_J standing for the partial derivative d^J f^i / du^J.
struct JetVar {
    enum Kind { U = 0, F = 1 };
    int kind = U;
    int index = 1;         // i, 1-based
    std::vector<int> jet;  // multi-index J, trailing zeros trimmed; empty for u^i and f^i

    bool operator==(const JetVar& o) const
    {
        return kind == o.kind && index == o.index && jet == o.jet;
    }
    // canonical order: all u-variables before all f-jets, then by index,
    // then by |J|, then lexicographically on J
    bool operator<(const JetVar& o) const;
};

// Process-global interning table.  Ids are dense and stable for the lifetime
// of the process; ordering queries go through the canonical JetVar order, so
// results do not depend on interning order.
class VarPool {
public:
    static int intern(const JetVar& v);
    static const JetVar& var(int id);
    static bool less(int a, int b) { return var(a) < var(b); }

    static int u(int i);
    static int f(int i) { return fjet(i, {}); }
    static int fjet(int i, std::vector<int> J);
    // id of the jet raised by one derivative in direction j (1-based)
    static int raise(int id, int j);

    static std::string name(int id);
};

} // namespace tc
