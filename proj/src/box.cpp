#include "meyerlab/box.hpp"

namespace meyerlab {

using namespace exactnum;

bool Box::contains(const groupmodels::GroupPoint& g) const {
    if (trivial()) return true;
    if (static_cast<int>(g.coords.size()) != dim())
        throw ModelMismatchError("box dimension does not match point arity");
    for (std::size_t i = 0; i < axes.size(); ++i) {
        if (scalar_compare(g.coords[i], axes[i].lo) < 0) return false;
        if (scalar_compare(g.coords[i], axes[i].hi) > 0) return false;
    }
    return true;
}

Box Box::shrunk(const Rational& margin) const {
    Box r = *this;
    for (auto& a : r.axes) {
        a.lo += margin;
        a.hi -= margin;
    }
    return r;
}

Box Box::scaled(const Rational& factor) const {
    Box r = *this;
    for (auto& a : r.axes) {
        a.lo *= factor;
        a.hi *= factor;
    }
    return r;
}

Box Box::cube(int dim, const Rational& halfwidth) {
    Box b;
    for (int i = 0; i < dim; ++i) b.axes.push_back({-halfwidth, halfwidth});
    return b;
}

bool box_subset(const Box& inner, const Box& outer) {
    if (outer.trivial()) return true;
    if (inner.trivial() || inner.dim() != outer.dim()) return false;
    for (std::size_t i = 0; i < inner.axes.size(); ++i)
        if (inner.axes[i].lo < outer.axes[i].lo || inner.axes[i].hi > outer.axes[i].hi)
            return false;
    return true;
}

std::string format_box(const Box& b) {
    std::string s;
    for (std::size_t i = 0; i < b.axes.size(); ++i) {
        if (i) s += "x";
        s += "[" + format_rational(b.axes[i].lo) + "," + format_rational(b.axes[i].hi) + "]";
    }
    return s;
}

Box parse_box(const std::string& text) {
    Box b;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] != '[') throw ParseError("bad box literal: " + text);
        std::size_t comma = text.find(',', pos);
        std::size_t close = text.find(']', pos);
        if (comma == std::string::npos || close == std::string::npos || comma > close)
            throw ParseError("bad box literal: " + text);
        b.axes.push_back({parse_rational(text.substr(pos + 1, comma - pos - 1)),
                          parse_rational(text.substr(comma + 1, close - comma - 1))});
        pos = close + 1;
        if (pos < text.size()) {
            if (text[pos] != 'x') throw ParseError("bad box literal: " + text);
            ++pos;
        }
    }
    if (b.axes.empty()) throw ParseError("bad box literal: " + text);
    return b;
}

}  // namespace meyerlab
