#include "cyclophi/coeff_engine.hpp"

#include <algorithm>
#include <bit>
#include <list>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "cyclophi/errors.hpp"
#include "cyclophi/numthy.hpp"

namespace cyclophi::engine {

std::int64_t CoeffVec::eval_at_one() const {
    std::int64_t s = 0;
    for (std::int64_t c : coeffs) s = checked_add(s, c);
    return s;
}

std::int64_t CoeffVec::max_abs_coefficient() const {
    std::int64_t m = 0;
    for (std::int64_t c : coeffs) {
        std::int64_t a = c < 0 ? -c : c;
        if (a > m) m = a;
    }
    return m;
}

HalfSeries phi_lower_half(std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("phi_lower_half: n must be >= 2");

    numthy::Factorization fac = numthy::factorize(n);
    const std::uint64_t m = numthy::totient(fac);
    const std::uint64_t half = m / 2;
    const std::size_t L = static_cast<std::size_t>(half) + 2;

    std::vector<std::int64_t> f(L, 0);
    f[0] = 1;

    // The polynomial is the product of (1 - x^{n/s})^{mu(s)} over squarefree
    // s | n. Multiplication by (1 - x^d) runs backward; division by it is the
    // geometric-series expansion and runs forward. Both are exact in the
    // truncated series ring.
    const auto& pf = fac.factors;
    const unsigned t = static_cast<unsigned>(pf.size());
    for (std::uint32_t mask = 0; mask < (1u << t); ++mask) {
        std::uint64_t s = 1;
        for (unsigned b = 0; b < t; ++b)
            if (mask & (1u << b)) s *= pf[b].prime;
        const std::uint64_t d = n / s;
        if (d >= L) continue;
        const std::size_t ds = static_cast<std::size_t>(d);
        if (std::popcount(mask) % 2 == 0) {
            for (std::size_t j = L; j-- > ds;) {
                if (__builtin_sub_overflow(f[j], f[j - ds], &f[j]))
                    throw OverflowError("coefficient overflow in series engine at n=" +
                                        std::to_string(n));
            }
        } else {
            for (std::size_t j = ds; j < L; ++j) {
                if (__builtin_add_overflow(f[j], f[j - ds], &f[j]))
                    throw OverflowError("coefficient overflow in series engine at n=" +
                                        std::to_string(n));
            }
        }
    }

    if (f[0] != 1)
        throw std::logic_error("series engine lost the monic normalization at n=" +
                               std::to_string(n));
    // The extra coefficient past the midpoint must already agree with its
    // mirror image; this catches sign or stride mistakes cheaply.
    const std::size_t extra = static_cast<std::size_t>(half) + 1;
    const std::size_t mirror = static_cast<std::size_t>(m - (half + 1));
    if (extra <= m && f[extra] != f[mirror])
        throw std::logic_error("series engine broke palindromy at n=" + std::to_string(n));

    HalfSeries out;
    out.n = n;
    out.degree = m;
    out.lower = std::move(f);
    return out;
}

CoeffVec phi_poly_series(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("phi_poly_series: n must be positive");
    if (n == 1) return CoeffVec{1, {-1, 1}};

    HalfSeries hs = phi_lower_half(n);
    const std::size_t m = static_cast<std::size_t>(hs.degree);
    const std::size_t half = m / 2;

    std::vector<std::int64_t> coeffs(m + 1);
    for (std::size_t j = 0; j <= half; ++j) coeffs[j] = hs.lower[j];
    for (std::size_t j = half + 1; j <= m; ++j) coeffs[j] = coeffs[m - j];
    return CoeffVec{n, std::move(coeffs)};
}

namespace {

// In-place exact division of a by the monic polynomial b; a becomes the
// quotient. Throws if the remainder is nonzero.
void divide_exact(std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
                  std::uint64_t context_n) {
    const std::size_t db = b.size() - 1;
    const std::size_t da = a.size() - 1;
    if (da < db) throw std::logic_error("divide_exact: dividend degree too small");

    std::vector<std::int64_t> q(da - db + 1);
    for (std::size_t i = q.size(); i-- > 0;) {
        const std::int64_t c = a[i + db];
        q[i] = c;
        if (c != 0) {
            for (std::size_t j = 0; j < db; ++j)
                a[i + j] = checked_sub(a[i + j], checked_mul(c, b[j]));
        }
    }
    for (std::size_t j = 0; j < db; ++j) {
        if (a[j] != 0)
            throw std::logic_error("inexact cyclotomic division at n=" +
                                   std::to_string(context_n));
    }
    a = std::move(q);
}

}  // namespace

struct DivisionEngine::Impl {
    std::size_t capacity;
    std::list<std::pair<std::uint64_t, std::shared_ptr<const CoeffVec>>> lru;
    std::unordered_map<std::uint64_t, decltype(lru)::iterator> index;
    mutable std::mutex mutex;

    std::shared_ptr<const CoeffVec> lookup(std::uint64_t n) {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = index.find(n);
        if (it == index.end()) return nullptr;
        lru.splice(lru.begin(), lru, it->second);
        return it->second->second;
    }

    void insert(std::uint64_t n, std::shared_ptr<const CoeffVec> v) {
        std::lock_guard<std::mutex> lock(mutex);
        if (index.count(n)) return;
        lru.emplace_front(n, std::move(v));
        index[n] = lru.begin();
        while (lru.size() > capacity) {
            index.erase(lru.back().first);
            lru.pop_back();
        }
    }
};

DivisionEngine::DivisionEngine(std::size_t cache_capacity) : impl_(new Impl) {
    impl_->capacity = cache_capacity == 0 ? 1 : cache_capacity;
}

DivisionEngine::~DivisionEngine() = default;

std::size_t DivisionEngine::cache_size() const {
    std::lock_guard<std::mutex> lock(impl_->mutex);
    return impl_->lru.size();
}

std::shared_ptr<const CoeffVec> DivisionEngine::compute_ptr(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("phi_poly_division: n must be positive");
    if (auto hit = impl_->lookup(n)) return hit;

    std::shared_ptr<const CoeffVec> result;
    if (n == 1) {
        result = std::make_shared<CoeffVec>(CoeffVec{1, {-1, 1}});
    } else {
        // x^n - 1 divided by every proper cyclotomic factor, smallest first.
        std::vector<std::int64_t> a(static_cast<std::size_t>(n) + 1, 0);
        a[0] = -1;
        a[static_cast<std::size_t>(n)] = 1;
        for (std::uint64_t d : numthy::divisors(n)) {
            if (d == n) continue;
            auto pd = compute_ptr(d);
            divide_exact(a, pd->coeffs, n);
        }
        result = std::make_shared<CoeffVec>(CoeffVec{n, std::move(a)});
    }
    impl_->insert(n, result);
    return result;
}

CoeffVec DivisionEngine::compute(std::uint64_t n) { return *compute_ptr(n); }

CoeffVec phi_poly_division(std::uint64_t n) {
    static DivisionEngine shared_engine;
    return shared_engine.compute(n);
}

CoeffVec phi_poly_negate_odd(const CoeffVec& v) {
    if (v.n < 3 || v.n % 2 == 0)
        throw std::invalid_argument("phi_poly_negate_odd: index must be odd and > 1");
    CoeffVec out;
    out.n = v.n * 2;
    out.coeffs = v.coeffs;
    for (std::size_t j = 1; j < out.coeffs.size(); j += 2) out.coeffs[j] = -out.coeffs[j];
    return out;
}

std::vector<std::int64_t> coefficient_value_set(const CoeffVec& v) {
    std::vector<std::int64_t> vals = v.coeffs;
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

}  // namespace cyclophi::engine
