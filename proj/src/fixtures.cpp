#include "symext/fixtures.hpp"

#include <stdexcept>

namespace symext {

Poset p3() { return Poset({"1", "a", "b"}, {{1, 0}, {2, 0}}, 0); }

Poset seven() {
    return Poset({"1", "c", "d", "c0", "c1", "d0", "d1"}, {{1, 0}, {2, 0}, {3, 1}, {4, 1}, {5, 2}, {6, 2}}, 0);
}

std::vector<Poset> lottery_parts() { return {p3(), p3()}; }

SymSystem striv() {
    Poset P = p3();
    Group G = Group::from_elements(3, {identity_perm(3)});
    return SymSystem(P, G, {G.trivial()}, "Striv");
}

SymSystem ssym() {
    Poset P = p3();
    Group G = Group::from_elements(3, {identity_perm(3), swap_perm(3, 1, 2)});
    return SymSystem(P, G, {G.all()}, "Ssym");
}

SymSystem lottery_system() {
    auto parts = lottery_parts();
    Poset L = lottery_sum(parts);
    Perm t = identity_perm(L.size());
    for (int p = 0; p < parts[0].size(); ++p) {
        t[lottery_index(parts, 0, p)] = lottery_index(parts, 1, p);
        t[lottery_index(parts, 1, p)] = lottery_index(parts, 0, p);
    }
    Group G = Group::from_elements(L.size(), {identity_perm(L.size()), t});
    return SymSystem(L, G, {G.all()}, "L2");
}

SymSystem seven_sym() {
    Poset P = seven();
    Group G = generate_group(P, {swap_perm(7, 3, 4), swap_perm(7, 5, 6), [] {
                                     Perm s = identity_perm(7);
                                     s[1] = 2, s[2] = 1, s[3] = 5, s[5] = 3, s[4] = 6, s[6] = 4;
                                     return s;
                                 }()});
    Bits leaves = G.generated({G.index_of(swap_perm(7, 3, 4)), G.index_of(swap_perm(7, 5, 6))});
    return SymSystem(P, G, {leaves}, "Seven");
}

SymSystem one_point_system() {
    Group G = Group::from_elements(1, {identity_perm(1)});
    return SymSystem(one_point_poset(), G, {G.trivial()}, "One");
}

std::vector<std::string> fixture_ids() { return {"Striv", "Ssym", "L2", "Seven", "One"}; }

SymSystem fixture(const std::string& id) {
    if (id == "Striv") return striv();
    if (id == "Ssym") return ssym();
    if (id == "L2") return lottery_system();
    if (id == "Seven") return seven_sym();
    if (id == "One") return one_point_system();
    throw std::out_of_range("unknown fixture " + id);
}

}  // namespace symext
