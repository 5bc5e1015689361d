#include "meyerlab/group_model.hpp"

#include <sstream>

namespace meyerlab::groupmodels {

using namespace exactnum;

GroupModel parse_model_descriptor(const std::string& text) {
    if (text == "axb") return GroupModel::ax_plus_b();
    if (text.rfind("Rn:", 0) == 0) {
        std::string rest = text.substr(3);
        std::size_t colon = rest.find(':');
        int n = std::stoi(rest.substr(0, colon));
        if (colon == std::string::npos) return GroupModel::additive_rn(n);
        std::string dom = rest.substr(colon + 1);
        if (dom.rfind("quad(", 0) == 0 && dom.back() == ')')
            return GroupModel::additive_rn_quad(n, std::stol(dom.substr(5, dom.size() - 6)));
        throw ParseError("bad model descriptor: " + text);
    }
    if (text.rfind("series:", 0) == 0) {
        unsigned p = 0;
        int N = 0, m = 0;
        std::stringstream ss(text.substr(7));
        std::string part;
        while (std::getline(ss, part, ':')) {
            if (part.rfind("p=", 0) == 0) p = static_cast<unsigned>(std::stoul(part.substr(2)));
            else if (part.rfind("N=", 0) == 0) N = std::stoi(part.substr(2));
            else if (part.rfind("m=", 0) == 0) m = std::stoi(part.substr(2));
            else throw ParseError("bad model descriptor: " + text);
        }
        if (p < 2 || N < 1 || m < 1) throw ParseError("bad model descriptor: " + text);
        return GroupModel::additive_series(p, N, m);
    }
    throw ParseError("bad model descriptor: " + text);
}

std::string format_model_descriptor(const GroupModel& m) {
    switch (m.kind) {
        case ModelKind::AxPlusB: return "axb";
        case ModelKind::AdditiveRn:
            if (m.domain == ScalarDomain::Quad)
                return "Rn:" + std::to_string(m.dim) + ":quad(" + std::to_string(m.quad_d) + ")";
            return "Rn:" + std::to_string(m.dim);
        case ModelKind::AdditiveSeries:
            return "series:p=" + std::to_string(m.p) + ":N=" + std::to_string(m.prec) +
                   ":m=" + std::to_string(m.dim);
    }
    throw Error("unreachable");
}

bool GroupPoint::operator==(const GroupPoint& o) const {
    if (!(model == o.model) || coords.size() != o.coords.size()) return false;
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (!scalar_eq(coords[i], o.coords[i])) return false;
    return true;
}

void check_point(const GroupPoint& g) {
    if (static_cast<int>(g.coords.size()) != g.model.dim)
        throw ModelMismatchError("coordinate arity does not match the model");
    if (g.model.kind == ModelKind::AxPlusB) {
        if (scalar_compare(g.coords[0], Rational(0)) <= 0)
            throw ModelMismatchError("AxPlusB first coordinate must be positive");
    }
}

namespace {
void check_same_model(const GroupPoint& g, const GroupPoint& h) {
    if (!(g.model == h.model)) throw ModelMismatchError("points from different group models");
}
}  // namespace

GroupPoint identity(const GroupModel& m) {
    GroupPoint e{m, {}};
    switch (m.kind) {
        case ModelKind::AdditiveRn:
            for (int i = 0; i < m.dim; ++i)
                e.coords.push_back(m.domain == ScalarDomain::Quad
                                       ? Scalar(QuadElem::from_rational(Rational(0), m.quad_d))
                                       : Scalar(Rational(0)));
            break;
        case ModelKind::AxPlusB:
            e.coords = {Scalar(Rational(1)), Scalar(Rational(0))};
            break;
        case ModelKind::AdditiveSeries:
            for (int i = 0; i < m.dim; ++i)
                e.coords.push_back(Scalar(FpSeries::zero(m.p, m.prec)));
            break;
    }
    return e;
}

GroupPoint multiply(const GroupPoint& g, const GroupPoint& h) {
    check_same_model(g, h);
    GroupPoint r{g.model, {}};
    switch (g.model.kind) {
        case ModelKind::AdditiveRn:
        case ModelKind::AdditiveSeries:
            for (std::size_t i = 0; i < g.coords.size(); ++i)
                r.coords.push_back(scalar_arith(g.coords[i], h.coords[i], ArithOp::Add));
            break;
        case ModelKind::AxPlusB: {
            // (a,b)*(a',b') = (a a', a b' + b)
            Scalar a = scalar_arith(g.coords[0], h.coords[0], ArithOp::Mul);
            Scalar ab = scalar_arith(g.coords[0], h.coords[1], ArithOp::Mul);
            r.coords = {a, scalar_arith(ab, g.coords[1], ArithOp::Add)};
            break;
        }
    }
    return r;
}

GroupPoint inverse(const GroupPoint& g) {
    GroupPoint r{g.model, {}};
    switch (g.model.kind) {
        case ModelKind::AdditiveRn:
        case ModelKind::AdditiveSeries:
            for (const auto& c : g.coords) r.coords.push_back(scalar_neg(c));
            break;
        case ModelKind::AxPlusB: {
            // (a,b)^{-1} = (1/a, -b/a)
            Scalar one{Rational(1)};
            Scalar ainv = scalar_arith(one, g.coords[0], ArithOp::Div);
            Scalar mb = scalar_neg(g.coords[1]);
            r.coords = {ainv, scalar_arith(mb, g.coords[0], ArithOp::Div)};
            break;
        }
    }
    return r;
}

GroupPoint rational_point(const GroupModel& m, std::vector<Rational> coords) {
    GroupPoint g{m, {}};
    for (auto& c : coords) {
        if (m.kind == ModelKind::AdditiveRn && m.domain == ScalarDomain::Quad)
            g.coords.push_back(QuadElem::from_rational(c, m.quad_d));
        else
            g.coords.push_back(std::move(c));
    }
    check_point(g);
    return g;
}

GroupPoint quad_point(const GroupModel& m, std::vector<QuadElem> coords) {
    GroupPoint g{m, {}};
    for (auto& c : coords) g.coords.push_back(std::move(c));
    check_point(g);
    return g;
}

Rational modular_function(const GroupPoint& g) {
    check_point(g);
    if (g.model.kind != ModelKind::AxPlusB) return Rational(1);
    const auto& a = std::get<Rational>(g.coords[0]);
    return Rational(1) / a;
}

bool point_less(const GroupPoint& a, const GroupPoint& b) {
    for (std::size_t i = 0; i < a.coords.size() && i < b.coords.size(); ++i) {
        if (!scalar_eq(a.coords[i], b.coords[i])) return scalar_less(a.coords[i], b.coords[i]);
    }
    return a.coords.size() < b.coords.size();
}

std::string format_point(const GroupPoint& g) {
    std::string s;
    for (std::size_t i = 0; i < g.coords.size(); ++i) {
        if (i) s += " ";
        s += format_scalar(g.coords[i]);
    }
    return s;
}

}  // namespace meyerlab::groupmodels
