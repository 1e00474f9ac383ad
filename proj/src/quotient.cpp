#include "latchroma/quotient.hpp"

namespace latchroma {

namespace {

Int mod_positive(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

} // namespace

QuotientGroup::QuotientGroup(const IMat& sub) : n_(sub.rows()) {
    if (sub.rows() != sub.cols())
        throw Error(ErrorCode::SingularSublattice, "sublattice matrix must be square");
    Int d = det_int(sub);
    if (d == 0) throw Error(ErrorCode::SingularSublattice, "sublattice matrix is singular");
    SnfResult s = snf(sub);
    divisors_.assign(n_, Int(1));
    for (int i = 0; i < n_; ++i) {
        divisors_[i] = s.s(i, i);
        if (divisors_[i] <= 0)
            throw Error(ErrorCode::BadInput, "smith form produced a nonpositive divisor");
    }
    v_ = s.v;
    QMat vinv_q = inverse(to_rational(v_));
    vinv_ = to_integer(vinv_q);
    index_ = boost::multiprecision::abs(d);
    index_ll_ = index_ <= Int(std::numeric_limits<long long>::max())
                    ? index_.convert_to<long long>()
                    : -1;
}

std::vector<Int> QuotientGroup::digits_of(const IVec& x) const {
    if (static_cast<int>(x.size()) != n_)
        throw Error(ErrorCode::DimensionMismatch, "quotient reduce: wrong length");
    std::vector<Int> y(n_, Int(0));
    for (int i = 0; i < n_; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < n_; ++j) y[j] += x[i] * v_(i, j);
    }
    for (int j = 0; j < n_; ++j) y[j] = mod_positive(y[j], divisors_[j]);
    return y;
}

IVec QuotientGroup::reduce(const IVec& x) const {
    std::vector<Int> z = digits_of(x);
    IVec rep(n_, Int(0));
    for (int i = 0; i < n_; ++i) {
        if (z[i] == 0) continue;
        for (int j = 0; j < n_; ++j) rep[j] += z[i] * vinv_(i, j);
    }
    return rep;
}

long long QuotientGroup::coset_index(const IVec& x) const {
    if (index_ll_ < 0) throw Error(ErrorCode::BadInput, "quotient too large to index");
    std::vector<Int> z = digits_of(x);
    long long idx = 0;
    for (int i = 0; i < n_; ++i)
        idx = idx * divisors_[i].convert_to<long long>() + z[i].convert_to<long long>();
    return idx;
}

IVec QuotientGroup::rep(long long i) const {
    if (index_ll_ < 0) throw Error(ErrorCode::BadInput, "quotient too large to enumerate");
    std::vector<Int> z(n_, Int(0));
    for (int k = n_ - 1; k >= 0; --k) {
        long long dk = divisors_[k].convert_to<long long>();
        z[k] = Int(i % dk);
        i /= dk;
    }
    IVec rep(n_, Int(0));
    for (int k = 0; k < n_; ++k) {
        if (z[k] == 0) continue;
        for (int j = 0; j < n_; ++j) rep[j] += z[k] * vinv_(k, j);
    }
    return rep;
}

QuotientGroup quotient_structure(const IMat& sub) { return QuotientGroup(sub); }

} // namespace latchroma
