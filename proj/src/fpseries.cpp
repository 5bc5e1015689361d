#include "meyerlab/fpseries.hpp"

#include <algorithm>
#include <sstream>

namespace meyerlab::exactnum {

FpSeries::FpSeries(unsigned p, int prec, int val, std::vector<unsigned> coeffs)
    : p_(p), prec_(prec), val_(val), coeffs_(std::move(coeffs)) {
    if (p_ < 2) throw DomainMismatchError("series characteristic must be a prime >= 2");
    if (prec_ < 1) throw PrecisionError("series precision must be >= 1");
    for (auto& c : coeffs_) c %= p_;
    normalize();
}

void FpSeries::normalize() {
    // drop anything at or above the truncation order
    if (val_ < prec_ && static_cast<int>(coeffs_.size()) > prec_ - val_)
        coeffs_.resize(prec_ - val_);
    // advance past leading zeros
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
        val_ += static_cast<int>(lead);
    }
    if (coeffs_.empty() || val_ >= prec_) {
        coeffs_.clear();
        val_ = prec_;
        return;
    }
    // drop trailing zeros (they are implied up to prec_)
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.empty()) {
        val_ = prec_;
        return;
    }
    if (val_ < -kValuationFloor)
        throw PrecisionError("series valuation below the Laurent floor");
}

FpSeries FpSeries::monomial(unsigned p, int prec, int k, unsigned c) {
    return FpSeries(p, prec, k, {c});
}

unsigned FpSeries::coeff(int i) const {
    if (i >= prec_) throw PrecisionError("coefficient index beyond series precision");
    if (i < val_ || i >= val_ + static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(i - val_)];
}

FpSeries FpSeries::truncated(int new_prec) const {
    if (new_prec > prec_) throw PrecisionError("cannot raise series precision");
    std::vector<unsigned> c = coeffs_;
    return FpSeries(p_, new_prec, is_zero() ? new_prec : val_, std::move(c));
}

FpSeries FpSeries::operator-() const {
    std::vector<unsigned> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = (p_ - coeffs_[i]) % p_;
    return FpSeries(p_, prec_, val_, std::move(c));
}

FpSeries FpSeries::operator+(const FpSeries& o) const {
    check_domain(o);
    const int prec = std::min(prec_, o.prec_);
    const int lo = std::min(val_, o.val_);
    if (lo >= prec) return zero(p_, prec);
    std::vector<unsigned> c(static_cast<std::size_t>(prec - lo), 0);
    auto acc = [&](const FpSeries& s) {
        for (int i = s.val_; i < std::min(prec, s.val_ + static_cast<int>(s.coeffs_.size())); ++i)
            c[static_cast<std::size_t>(i - lo)] =
                (c[static_cast<std::size_t>(i - lo)] + s.coeffs_[static_cast<std::size_t>(i - s.val_)]) % p_;
    };
    acc(*this);
    acc(o);
    return FpSeries(p_, prec, lo, std::move(c));
}

FpSeries FpSeries::operator-(const FpSeries& o) const { return *this + (-o); }

FpSeries FpSeries::operator*(const FpSeries& o) const {
    check_domain(o);
    const int prec = std::min(prec_, o.prec_);
    if (is_zero() || o.is_zero()) return zero(p_, prec);
    const int lo = val_ + o.val_;
    if (lo >= prec) return zero(p_, prec);
    std::vector<unsigned> c(static_cast<std::size_t>(prec - lo), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            const int idx = val_ + static_cast<int>(i) + o.val_ + static_cast<int>(j);
            if (idx >= prec) break;
            auto& slot = c[static_cast<std::size_t>(idx - lo)];
            slot = (slot + coeffs_[i] * o.coeffs_[j]) % p_;
        }
    }
    return FpSeries(p_, prec, lo, std::move(c));
}

namespace {
unsigned inv_mod(unsigned a, unsigned p) {
    // p is a small prime; brute force is fine
    a %= p;
    for (unsigned x = 1; x < p; ++x)
        if (a * x % p == 1) return x;
    throw DivisionByZeroError("no inverse mod p");
}
}  // namespace

FpSeries FpSeries::operator/(const FpSeries& o) const {
    check_domain(o);
    if (o.is_zero()) throw DivisionByZeroError("series division by zero");
    const int prec = std::min(prec_, o.prec_);
    if (is_zero()) return zero(p_, prec);
    // long division on the unit parts; result valuation is val_ - o.val_
    const int rv = val_ - o.val_;
    const int terms = prec - rv;  // number of result coefficients we can know
    if (terms <= 0) return zero(p_, prec);
    const unsigned lead_inv = inv_mod(o.coeffs_[0], p_);
    std::vector<unsigned> q(static_cast<std::size_t>(terms), 0);
    std::vector<unsigned> rem(static_cast<std::size_t>(terms), 0);
    for (std::size_t k = 0; k < rem.size() && k < coeffs_.size(); ++k) rem[k] = coeffs_[k];
    for (int k = 0; k < terms; ++k) {
        const unsigned qk = rem[static_cast<std::size_t>(k)] * lead_inv % p_;
        q[static_cast<std::size_t>(k)] = qk;
        if (qk == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            const int idx = k + static_cast<int>(j);
            if (idx >= terms) break;
            auto& slot = rem[static_cast<std::size_t>(idx)];
            slot = (slot + p_ * p_ - qk * o.coeffs_[j] % p_) % p_;
        }
    }
    return FpSeries(p_, prec, rv, std::move(q));
}

FpSeries FpSeries::frobenius() const {
    if (is_zero()) return *this;
    const int pv = static_cast<int>(p_) * val_;
    if (pv >= prec_)
        throw PrecisionError("frobenius: all terms beyond the series precision");
    std::vector<unsigned> c(static_cast<std::size_t>(prec_ - pv), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const long idx = static_cast<long>(p_) * (val_ + static_cast<long>(i));
        if (idx >= prec_) break;
        c[static_cast<std::size_t>(idx - pv)] = coeffs_[i];
    }
    return FpSeries(p_, prec_, pv, std::move(c));
}

bool FpSeries::operator<(const FpSeries& o) const {
    if (p_ != o.p_) return p_ < o.p_;
    if (val_ != o.val_) return val_ < o.val_;
    if (coeffs_ != o.coeffs_) return coeffs_ < o.coeffs_;
    return prec_ < o.prec_;
}

std::string format_series(const FpSeries& x) {
    std::ostringstream os;
    os << "p=" << x.p() << ";N=" << x.precision() << ";v=" << x.valuation() << ";c=";
    bool first = true;
    for (int i = x.valuation(); i < x.precision(); ++i) {
        if (!first) os << ",";
        os << x.coeff(i);
        first = false;
    }
    return os.str();
}

FpSeries parse_series(const std::string& text) {
    auto field = [&](const std::string& key) -> std::string {
        std::size_t at = text.find(key + "=");
        if (at == std::string::npos) throw ParseError("bad series literal: " + text);
        std::size_t start = at + key.size() + 1;
        std::size_t end = text.find(';', start);
        return text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    };
    try {
        unsigned p = static_cast<unsigned>(std::stoul(field("p")));
        int N = std::stoi(field("N"));
        int v = std::stoi(field("v"));
        std::string cs = field("c");
        std::vector<unsigned> coeffs;
        std::size_t pos = 0;
        while (pos < cs.size()) {
            std::size_t comma = cs.find(',', pos);
            std::string tok = cs.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (!tok.empty()) coeffs.push_back(static_cast<unsigned>(std::stoul(tok)));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return FpSeries(p, N, v, std::move(coeffs));
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("bad series literal: " + text);
    }
}

}  // namespace meyerlab::exactnum
