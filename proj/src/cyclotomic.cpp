#include "gbfv/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "gbfv/numtheory.hpp"

namespace gbfv::cyclo {

namespace {

struct ConductorData {
    long phi;                                       // degree of Q(zeta_N)
    std::vector<BigInt> phi_poly;                   // Phi_N, constant first
    std::vector<std::pair<long, BigInt>> lower;     // nonzero terms of Phi_N below the leading one
};

std::shared_mutex conductor_cache_mutex;
std::map<long, ConductorData> conductor_cache;

const ConductorData& conductor_data(long N) {
    if (N < 3 || N % 2 == 0) throw std::invalid_argument("conductor must be odd and >= 3");
    {
        std::shared_lock lock(conductor_cache_mutex);
        auto it = conductor_cache.find(N);
        if (it != conductor_cache.end()) return it->second;
    }
    ConductorData d;
    d.phi_poly = nt::cyclotomic_poly(static_cast<nt::u64>(N));
    d.phi = static_cast<long>(d.phi_poly.size()) - 1;
    for (long k = 0; k < d.phi; ++k)
        if (d.phi_poly[k] != 0) d.lower.emplace_back(k, d.phi_poly[k]);
    std::unique_lock lock(conductor_cache_mutex);
    return conductor_cache.emplace(N, std::move(d)).first->second;
}

template <typename Coeff>
void reduce_in_place(std::vector<Coeff>& a, long N, const ConductorData& d) {
    // Fold exponents >= N first (z^N = 1), then divide by the monic Phi_N.
    if (static_cast<long>(a.size()) > N) {
        for (std::size_t k = a.size(); k-- > static_cast<std::size_t>(N);) {
            a[k - N] += a[k];
            a[k] = 0;
        }
        a.resize(N);
    }
    while (static_cast<long>(a.size()) > d.phi) {
        Coeff c = a.back();
        a.pop_back();
        if (c != 0) {
            std::size_t base = a.size() - d.phi;
            for (const auto& [k, ck] : d.lower) a[base + k] -= c * ck;
        }
    }
    a.resize(d.phi);
}

}  // namespace

template <typename Coeff>
Element<Coeff> Element<Coeff>::zero(long conductor) {
    const auto& d = conductor_data(conductor);
    Element e;
    e.conductor_ = conductor;
    e.coeffs_.resize(d.phi);
    return e;
}

template <typename Coeff>
Element<Coeff> Element<Coeff>::constant(long conductor, Coeff value) {
    Element e = zero(conductor);
    e.coeffs_[0] = std::move(value);
    return e;
}

template <typename Coeff>
Element<Coeff> Element<Coeff>::zeta_pow(long conductor, long k) {
    const auto& d = conductor_data(conductor);
    k %= conductor;
    if (k < 0) k += conductor;
    std::vector<Coeff> a(k + 1);
    a[k] = 1;
    reduce_in_place(a, conductor, d);
    Element e;
    e.conductor_ = conductor;
    e.coeffs_ = std::move(a);
    return e;
}

template <typename Coeff>
Element<Coeff> Element<Coeff>::reduce(long conductor, std::vector<Coeff> poly) {
    const auto& d = conductor_data(conductor);
    reduce_in_place(poly, conductor, d);
    Element e;
    e.conductor_ = conductor;
    e.coeffs_ = std::move(poly);
    return e;
}

template <typename Coeff>
bool Element<Coeff>::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

template <typename Coeff>
bool Element<Coeff>::is_constant() const {
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) return false;
    return true;
}

namespace {

void require_same_conductor(long a, long b) {
    if (a != b) throw std::invalid_argument("conductor mismatch: embed into a common conductor first");
    if (a == 0) throw std::invalid_argument("uninitialized element");
}

}  // namespace

template <typename Coeff>
Element<Coeff> Element<Coeff>::operator+(const Element& o) const {
    require_same_conductor(conductor_, o.conductor_);
    Element r = *this;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[k] += o.coeffs_[k];
    return r;
}

template <typename Coeff>
Element<Coeff> Element<Coeff>::operator-(const Element& o) const {
    require_same_conductor(conductor_, o.conductor_);
    Element r = *this;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[k] -= o.coeffs_[k];
    return r;
}

template <typename Coeff>
Element<Coeff> Element<Coeff>::operator-() const {
    Element r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

template <typename Coeff>
Element<Coeff> Element<Coeff>::operator*(const Element& o) const {
    require_same_conductor(conductor_, o.conductor_);
    const auto& d = conductor_data(conductor_);
    std::vector<Coeff> prod(2 * coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            if (o.coeffs_[j] == 0) continue;
            prod[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    reduce_in_place(prod, conductor_, d);
    Element r;
    r.conductor_ = conductor_;
    r.coeffs_ = std::move(prod);
    return r;
}

template <typename Coeff>
Element<Coeff> Element<Coeff>::operator*(const Coeff& s) const {
    Element r = *this;
    for (auto& c : r.coeffs_) c *= s;
    return r;
}

template <typename Coeff>
Element<Coeff> Element<Coeff>::pow(unsigned long k) const {
    Element r = one(conductor_);
    Element b = *this;
    while (k) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

template <typename Coeff>
Element<Coeff> Element<Coeff>::galois(long a) const {
    if (conductor_ == 0) throw std::invalid_argument("uninitialized element");
    long am = a % conductor_;
    if (am < 0) am += conductor_;
    if (std::gcd(am, conductor_) != 1)
        throw std::invalid_argument("galois exponent must be coprime to the conductor");
    const auto& d = conductor_data(conductor_);
    std::vector<Coeff> out(conductor_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        out[(static_cast<long>(k) * am) % conductor_] += coeffs_[k];
    }
    reduce_in_place(out, conductor_, d);
    Element r;
    r.conductor_ = conductor_;
    r.coeffs_ = std::move(out);
    return r;
}

template <typename Coeff>
Element<Coeff> Element<Coeff>::embed(long new_conductor) const {
    if (conductor_ == 0) throw std::invalid_argument("uninitialized element");
    if (new_conductor % conductor_ != 0)
        throw std::invalid_argument("embed: target conductor must be a multiple of the source");
    if (new_conductor == conductor_) return *this;
    const auto& d = conductor_data(new_conductor);
    long t = new_conductor / conductor_;
    std::vector<Coeff> out((coeffs_.size() - 1) * t + 1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k * t] = coeffs_[k];
    reduce_in_place(out, new_conductor, d);
    Element r;
    r.conductor_ = new_conductor;
    r.coeffs_ = std::move(out);
    return r;
}

template class Element<BigInt>;
template class Element<BigRat>;

CycRat to_rational(const CycInt& x) {
    std::vector<BigRat> c(x.coeffs().begin(), x.coeffs().end());
    return CycRat::reduce(x.conductor(), std::move(c));
}

std::optional<CycInt> to_integral(const CycRat& x) {
    std::vector<BigInt> c;
    c.reserve(x.degree());
    for (const auto& q : x.coeffs()) {
        if (q.get_den() != 1) return std::nullopt;
        c.push_back(q.get_num());
    }
    return CycInt::reduce(x.conductor(), std::move(c));
}

BigRat absolute_norm(const CycRat& x) {
    long N = x.conductor();
    CycRat acc = CycRat::one(N);
    for (long a = 1; a < N; ++a) {
        if (std::gcd(a, N) != 1) continue;
        acc = acc * x.galois(a);
    }
    if (!acc.is_constant()) throw std::logic_error("norm: Galois product is not rational");
    return acc.constant_term();
}

BigInt absolute_norm(const CycInt& x) {
    BigRat n = absolute_norm(to_rational(x));
    if (n.get_den() != 1) throw std::logic_error("norm of an integral element must be an integer");
    return n.get_num();
}

namespace {

// Resultant of monic f (here Phi_N) with g over Q, via res(f,g) =
// lc(g)^(deg f - deg r) * (-1)^(deg f * deg g) * res(g, r) with r = f mod g.
BigRat resultant(std::vector<BigRat> f, std::vector<BigRat> g) {
    auto deg = [](const std::vector<BigRat>& p) {
        for (std::size_t i = p.size(); i-- > 0;)
            if (p[i] != 0) return static_cast<long>(i);
        return -1L;
    };
    BigRat acc = 1;
    while (true) {
        long df = deg(f), dg = deg(g);
        if (dg < 0) return df == 0 ? acc : BigRat(0);
        if (dg == 0) {
            BigRat r = acc;
            for (long i = 0; i < df; ++i) r *= g[0];
            return r;
        }
        // r = f mod g
        std::vector<BigRat> r = f;
        r.resize(df + 1);
        for (long i = df; i >= dg; --i) {
            BigRat c = r[i] / g[dg];
            if (c == 0) continue;
            for (long j = 0; j <= dg; ++j) r[i - dg + j] -= c * g[j];
        }
        long dr = deg(r);
        BigRat lead = g[dg];
        for (long i = 0; i < df - dr; ++i) acc *= lead;
        if ((df % 2) && (dg % 2)) acc = -acc;
        f = std::move(g);
        g = std::move(r);
        if (dr >= 0) g.resize(dr + 1);
        else g.clear();
    }
}

}  // namespace

BigRat absolute_norm_resultant(const CycRat& x) {
    long N = x.conductor();
    auto phi_z = nt::cyclotomic_poly(static_cast<nt::u64>(N));
    std::vector<BigRat> f(phi_z.begin(), phi_z.end());
    std::vector<BigRat> g(x.coeffs().begin(), x.coeffs().end());
    return resultant(std::move(f), std::move(g));
}

CycRat inverse(const CycRat& x) {
    if (x.is_zero()) throw std::domain_error("inverse of zero");
    long N = x.conductor();
    CycRat acc = CycRat::one(N);
    for (long a = 2; a < N; ++a) {
        if (std::gcd(a, N) != 1) continue;
        acc = acc * x.galois(a);
    }
    CycRat check = acc * x;
    if (!check.is_constant()) throw std::logic_error("inverse: conjugate product is not rational");
    BigRat n = check.constant_term();
    BigRat ninv = 1 / n;
    return acc * ninv;
}

CycInt zeta2N_pow(long N, long j) {
    if (N < 3 || N % 2 == 0) throw std::invalid_argument("conductor must be odd and >= 3");
    long jm = j % (2 * N);
    if (jm < 0) jm += 2 * N;
    long e = (jm % N) * ((N + 1) / 2) % N;
    CycInt z = CycInt::zeta_pow(N, e);
    return (jm % 2) ? -z : z;
}

CycInt gauss_sum(long p, long N) {
    if (p < 3 || !nt::is_prime(static_cast<nt::u64>(p))) throw std::invalid_argument("gauss_sum: p must be an odd prime");
    if (N % p != 0) throw std::invalid_argument("gauss_sum: p must divide the conductor");
    long t = N / p;
    std::vector<BigInt> poly(N);
    for (long a = 1; a < p; ++a)
        poly[(a * t) % N] += nt::jacobi(a, static_cast<nt::u64>(p));
    return CycInt::reduce(N, std::move(poly));
}

CycInt omega(long N) {
    if (N < 3 || N % 2 == 0) throw std::invalid_argument("omega: conductor must be odd and >= 3");
    CycInt acc = CycInt::one(N);
    for (auto [p, e] : nt::factorize(static_cast<nt::u64>(N))) {
        if (!nt::is_self_conjugate(p, static_cast<nt::u64>(N)))
            throw std::invalid_argument("omega: prime " + std::to_string(p) +
                                        " is not self-conjugate mod " + std::to_string(N));
        acc = acc * gauss_sum(static_cast<long>(p), N).pow(static_cast<unsigned long>(e));
    }
    return acc;
}

bool is_unit(const CycInt& x) {
    BigInt n = absolute_norm(x);
    return n == 1 || n == -1;
}

bool int_divisible(const CycInt& x, const BigInt& k) {
    if (k == 0) throw std::invalid_argument("divisibility by zero");
    for (const auto& c : x.coeffs())
        if (c % k != 0) return false;
    return true;
}

bool congruent_mod(const CycInt& x, const CycInt& y, const BigInt& k) {
    return int_divisible(x - y, k);
}

namespace {

template <typename Coeff>
std::string format_element(const Element<Coeff>& x) {
    std::ostringstream os;
    os << "z" << x.conductor() << ":";
    bool any = false;
    for (std::size_t k = 0; k < x.degree(); ++k) {
        const Coeff& c = x.coeff(k);
        if (c == 0) continue;
        Coeff a = c < 0 ? Coeff(-c) : c;
        os << (any ? (c < 0 ? " - " : " + ") : (c < 0 ? " -" : " ")) << a;
        if (k > 0) os << "*z^" << k;
        any = true;
    }
    if (!any) os << " 0";
    return os.str();
}

struct ParsedTerm {
    std::string coeff;
    long exponent;
};

std::pair<long, std::vector<ParsedTerm>> parse_terms(const std::string& text) {
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && text[i] == ' ') ++i; };
    skip_ws();
    if (i >= text.size() || text[i] != 'z') throw std::invalid_argument("parse: expected conductor tag 'z<N>:'");
    ++i;
    std::size_t colon = text.find(':', i);
    if (colon == std::string::npos) throw std::invalid_argument("parse: missing ':' after conductor");
    long N = std::stol(text.substr(i, colon - i));
    i = colon + 1;
    std::vector<ParsedTerm> terms;
    int pending_sign = +1;
    skip_ws();
    while (i < text.size()) {
        if (text[i] == '+' || text[i] == '-') {
            pending_sign = text[i] == '-' ? -1 : +1;
            ++i;
            skip_ws();
            continue;
        }
        std::size_t start = i;
        while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) ++i;
        if (i == start) throw std::invalid_argument("parse: expected a coefficient");
        ParsedTerm t;
        t.coeff = (pending_sign < 0 ? "-" : "") + text.substr(start, i - start);
        t.exponent = 0;
        skip_ws();
        if (i < text.size() && text[i] == '*') {
            ++i;
            skip_ws();
            if (i >= text.size() || text[i] != 'z') throw std::invalid_argument("parse: expected 'z^k'");
            ++i;
            if (i >= text.size() || text[i] != '^') throw std::invalid_argument("parse: expected '^'");
            ++i;
            std::size_t es = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            t.exponent = std::stol(text.substr(es, i - es));
        }
        terms.push_back(std::move(t));
        pending_sign = +1;
        skip_ws();
    }
    return {N, terms};
}

}  // namespace

std::string to_string(const CycRat& x) { return format_element(x); }
std::string to_string(const CycInt& x) { return format_element(x); }

CycRat parse_cyc_rat(const std::string& text) {
    auto [N, terms] = parse_terms(text);
    std::vector<BigRat> poly;
    for (const auto& t : terms) {
        if (t.exponent >= static_cast<long>(poly.size())) poly.resize(t.exponent + 1);
        BigRat q(t.coeff);
        q.canonicalize();
        poly[t.exponent] += q;
    }
    if (poly.empty()) poly.resize(1);
    return CycRat::reduce(N, std::move(poly));
}

CycInt parse_cyc_int(const std::string& text) {
    auto parsed = parse_cyc_rat(text);
    auto as_int = to_integral(parsed);
    if (!as_int) throw std::invalid_argument("parse: element is not integral");
    return *as_int;
}

}  // namespace gbfv::cyclo
