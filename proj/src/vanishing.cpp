#include "meyerlab/vanishing.hpp"

namespace meyerlab::zariski {

namespace {
void fill_exponents(int vars, int degree_left, std::vector<int>& current,
                    std::vector<std::vector<int>>& out) {
    if (static_cast<int>(current.size()) == vars - 1) {
        current.push_back(degree_left);
        out.push_back(current);
        current.pop_back();
        return;
    }
    // lexicographically descending within a degree block: largest first
    for (int e = degree_left; e >= 0; --e) {
        current.push_back(e);
        fill_exponents(vars, degree_left - e, current, out);
        current.pop_back();
    }
}
}  // namespace

MonomialBasis MonomialBasis::up_to_degree(int vars, int degree) {
    if (vars < 1 || degree < 0) throw DomainMismatchError("bad monomial basis parameters");
    MonomialBasis basis;
    basis.vars = vars;
    basis.degree = degree;
    for (int d = 0; d <= degree; ++d) {
        std::vector<int> current;
        std::vector<std::vector<int>> block;
        fill_exponents(vars, d, current, block);
        for (auto& e : block) basis.exponents.push_back(std::move(e));
    }
    return basis;
}

Int monomial_count(int vars, int degree) {
    Int num(1), den(1);
    for (int i = 1; i <= degree; ++i) {
        num *= vars + i;
        den *= i;
    }
    return num / den;
}

}  // namespace meyerlab::zariski
