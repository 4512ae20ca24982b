#include "ellpic/fq.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace ellpic {

namespace {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// dense F_p[x] helpers for modulus construction (coefficients in [0, p))
using Pol = std::vector<long>;

void ptrim(Pol& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Pol pmul(const Pol& a, const Pol& b, long p) {
    if (a.empty() || b.empty()) return {};
    Pol c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    ptrim(c);
    return c;
}

Pol pmod(Pol a, const Pol& m, long p) {
    ptrim(a);
    long lead_inv = 0;
    {
        // m is monic here, but keep it general
        long lead = m.back() % p;
        long t = 1, e = p - 2, base = lead;
        while (e) {
            if (e & 1) t = t * base % p;
            base = base * base % p;
            e >>= 1;
        }
        lead_inv = t;
    }
    while (a.size() >= m.size()) {
        long c = a.back() * lead_inv % p;
        size_t shift = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i) {
            a[shift + i] = ((a[shift + i] - c * m[i]) % p + p) % p;
        }
        ptrim(a);
        if (a.empty()) break;
    }
    return a;
}

Pol pgcd(Pol a, Pol b, long p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        Pol r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// x^(p^e) mod m via iterated p-th powers
Pol x_pth_power_iterate(const Pol& m, long p, int e) {
    Pol cur = {0, 1};  // x
    cur = pmod(cur, m, p);
    for (int i = 0; i < e; ++i) {
        // cur <- cur^p mod m by square-and-multiply on exponent p
        Pol acc = {1};
        Pol base = cur;
        long exp = p;
        while (exp) {
            if (exp & 1) acc = pmod(pmul(acc, base, p), m, p);
            base = pmod(pmul(base, base, p), m, p);
            exp >>= 1;
        }
        cur = std::move(acc);
    }
    return cur;
}

bool is_irreducible(const Pol& m, long p) {
    int k = static_cast<int>(m.size()) - 1;
    if (k < 1) return false;
    // x^(p^k) == x mod m
    Pol xq = x_pth_power_iterate(m, p, k);
    Pol x = pmod({0, 1}, m, p);
    if (xq != x) return false;
    // gcd(x^(p^(k/l)) - x, m) == 1 for each prime l | k
    int rem = k;
    for (int l = 2; l <= rem; ++l) {
        if (rem % l) continue;
        while (rem % l == 0) rem /= l;
        Pol xe = x_pth_power_iterate(m, p, k / l);
        Pol diff = xe;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = ((diff[1] - 1) % p + p) % p;
        ptrim(diff);
        Pol g = pgcd(m, diff, p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace

const FqField* FqField::get(long p, int k) {
    static std::mutex mu;
    static std::map<std::pair<long, int>, std::unique_ptr<FqField>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, k);
    auto it = registry.find(key);
    if (it != registry.end()) return it->second.get();
    auto field = std::unique_ptr<FqField>(new FqField(p, k));
    auto* ptr = field.get();
    registry.emplace(key, std::move(field));
    return ptr;
}

FqField::FqField(long p, int k) : p_(p), k_(k) {
    if (!is_prime(p)) throw std::invalid_argument("FqField: p must be prime");
    if (k < 1) throw std::invalid_argument("FqField: k must be >= 1");
    long q = 1;
    for (int i = 0; i < k; ++i) {
        q *= p;
        if (q > max_field_size) throw std::invalid_argument("FqField: q = p^k exceeds bound 2^16");
    }
    q_ = q;

    if (k == 1) {
        mod_ = {0, 1};  // x
    } else {
        // least monic irreducible x^k + c_{k-1} x^{k-1} + ... + c_0
        for (long a = 0;; ++a) {
            if (a >= q_) throw std::logic_error("FqField: no irreducible found");
            Pol m(static_cast<size_t>(k) + 1, 0);
            long t = a;
            for (int i = 0; i < k; ++i) {
                m[i] = t % p;
                t /= p;
            }
            m[k] = 1;
            if (is_irreducible(m, p)) {
                mod_ = m;
                break;
            }
        }
        // reduction rows: x^(k+j) mod m
        red_.resize(static_cast<size_t>(k) - 1);
        Pol cur(mod_.begin(), mod_.end() - 1);  // x^k = -(c_0..c_{k-1})
        for (auto& c : cur) c = (p - c) % p;
        cur.resize(k, 0);
        for (int j = 0; j < k - 1; ++j) {
            red_[j] = cur;
            // multiply by x
            Pol nxt(k, 0);
            long top = cur[k - 1];
            for (int i = k - 1; i >= 1; --i) nxt[i] = cur[i - 1];
            nxt[0] = 0;
            if (top) {
                for (int i = 0; i < k; ++i)
                    nxt[i] = (nxt[i] + top * ((p - mod_[i]) % p)) % p;
            }
            cur = std::move(nxt);
        }
    }

    // solving tables (field sizes are capped, so eager construction is cheap)
    if (p_ != 2) {
        sqrt_tab_.assign(q_, -1);
        for (long z = 0; z < q_; ++z) {
            long s = mul(z, z);
            if (sqrt_tab_[s] < 0) sqrt_tab_[s] = static_cast<int32_t>(z);
        }
    } else {
        frob_inv_tab_.assign(q_, 0);
        as_tab_.assign(q_, -1);
        for (long z = 0; z < q_; ++z) {
            frob_inv_tab_[mul(z, z)] = static_cast<int32_t>(z);
            long v = add(mul(z, z), z);
            if (as_tab_[v] < 0) as_tab_[v] = static_cast<int32_t>(z);
        }
    }
    if (q_ <= 256) {
        // build into locals: mul() consults mul_tab_ once it is non-empty
        std::vector<uint16_t> mt(q_ * q_), at(q_ * q_);
        for (long a = 0; a < q_; ++a)
            for (long b = 0; b < q_; ++b) {
                mt[a * q_ + b] = static_cast<uint16_t>(mul(a, b));
                at[a * q_ + b] = static_cast<uint16_t>(add(a, b));
            }
        mul_tab_ = std::move(mt);
        add_tab_ = std::move(at);
    }
}

long FqField::add(long a, long b) const {
    if (k_ == 1) return (a + b) % p_;
    long r = 0, mult = 1;
    for (int i = 0; i < k_; ++i) {
        long da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        r += ((da + db) % p_) * mult;
        mult *= p_;
    }
    return r;
}

long FqField::sub(long a, long b) const { return add(a, neg(b)); }

long FqField::neg(long a) const {
    if (k_ == 1) return (p_ - a) % p_;
    long r = 0, mult = 1;
    for (int i = 0; i < k_; ++i) {
        long d = a % p_;
        a /= p_;
        r += ((p_ - d) % p_) * mult;
        mult *= p_;
    }
    return r;
}

long FqField::mul(long a, long b) const {
    if (k_ == 1) return a * b % p_;
    if (!mul_tab_.empty()) return mul_tab_[a * q_ + b];
    long da[17], db[17];
    long conv[33] = {0};
    long t = a;
    for (int i = 0; i < k_; ++i) {
        da[i] = t % p_;
        t /= p_;
    }
    t = b;
    for (int i = 0; i < k_; ++i) {
        db[i] = t % p_;
        t /= p_;
    }
    for (int i = 0; i < k_; ++i) {
        if (!da[i]) continue;
        for (int j = 0; j < k_; ++j) conv[i + j] += da[i] * db[j];
    }
    // fold x^(k+j) via reduction rows
    long out[17];
    for (int i = 0; i < k_; ++i) out[i] = conv[i] % p_;
    for (int j = 0; j < k_ - 1; ++j) {
        long c = conv[k_ + j] % p_;
        if (!c) continue;
        const auto& row = red_[j];
        for (int i = 0; i < k_; ++i) out[i] = (out[i] + c * row[i]) % p_;
    }
    long r = 0, mult = 1;
    for (int i = 0; i < k_; ++i) {
        r += out[i] * mult;
        mult *= p_;
    }
    return r;
}

long FqField::pow(long a, long e) const {
    long r = from_int(1), base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

long FqField::inv(long a) const {
    if (a == 0) throw std::domain_error("FqField: inverse of zero");
    // a^(q-2); fields are small, exponentiation is fine
    return pow(a, q_ - 2);
}

long FqField::from_int(long n) const {
    long r = n % p_;
    return r < 0 ? r + p_ : r;
}

std::optional<long> FqField::sqrt(long a) const {
    if (p_ == 2) return static_cast<long>(frob_inv_tab_[a]);
    int32_t r = sqrt_tab_[a];
    if (r < 0) return std::nullopt;
    return static_cast<long>(r);
}

std::optional<long> FqField::artin_schreier_root(long a) const {
    if (p_ != 2) throw std::domain_error("artin_schreier_root: characteristic 2 only");
    int32_t r = as_tab_[a];
    if (r < 0) return std::nullopt;
    return static_cast<long>(r);
}

std::string FqField::element_str(long a) const {
    if (k_ == 1) return std::to_string(a);
    std::string s;
    long t = a;
    for (int i = 0; i < k_; ++i) {
        long d = t % p_;
        t /= p_;
        if (!d) continue;
        std::string term;
        if (i == 0)
            term = std::to_string(d);
        else {
            if (d != 1) term = std::to_string(d);
            term += "g";
            if (i > 1) term += "^" + std::to_string(i);
        }
        s = s.empty() ? term : term + "+" + s;
    }
    return s.empty() ? "0" : s;
}

Fq FqEmbedding::map(const Fq& a) const {
    if (a.field() != src_) throw std::invalid_argument("FqEmbedding: wrong source field");
    return Fq(dst_, map_index(a.index()));
}

std::optional<Fq> FqEmbedding::preimage(const Fq& b) const {
    if (b.field() != dst_) throw std::invalid_argument("FqEmbedding: wrong target field");
    auto it = back_.find(b.index());
    if (it == back_.end()) return std::nullopt;
    return Fq(src_, it->second);
}

FqEmbedding::FqEmbedding(const FqField* src, const FqField* dst) : src_(src), dst_(dst) {
    if (src->p() != dst->p() || dst->k() % src->k() != 0)
        throw std::invalid_argument("FqEmbedding: no embedding between these fields");
    // least root of the source modulus in dst
    long rho = -1;
    const auto& m = src->modulus();
    for (long z = 0; z < dst->q(); ++z) {
        long acc = 0;
        for (size_t i = m.size(); i-- > 0;) {
            acc = dst->mul(acc, z);
            acc = dst->add(acc, dst->from_int(m[i]));
        }
        if (acc == 0) {
            rho = z;
            break;
        }
    }
    if (rho < 0) throw std::logic_error("FqEmbedding: modulus has no root in target");
    fwd_.resize(src->q());
    for (long a = 0; a < src->q(); ++a) {
        long acc = 0;
        long digits[17];
        long t = a;
        for (int i = 0; i < src->k(); ++i) {
            digits[i] = t % src->p();
            t /= src->p();
        }
        for (int i = src->k(); i-- > 0;) {
            acc = dst->mul(acc, rho);
            acc = dst->add(acc, dst->from_int(digits[i]));
        }
        fwd_[a] = acc;
        back_.emplace(acc, a);
    }
}

const FqEmbedding* FqEmbedding::get(const FqField* src, const FqField* dst) {
    static std::mutex mu;
    static std::map<std::pair<const FqField*, const FqField*>, std::unique_ptr<FqEmbedding>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(src, dst);
    auto it = registry.find(key);
    if (it != registry.end()) return it->second.get();
    auto e = std::unique_ptr<FqEmbedding>(new FqEmbedding(src, dst));
    auto* ptr = e.get();
    registry.emplace(key, std::move(e));
    return ptr;
}

}  // namespace ellpic
