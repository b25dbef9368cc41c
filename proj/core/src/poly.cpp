#include "slicecert/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace slicecert {

int PolyRing::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return static_cast<int>(i);
    return -1;
}

RingPtr make_ring(std::vector<std::string> vars) {
    auto r = std::make_shared<PolyRing>();
    r->vars = std::move(vars);
    if (r->nvars() > 255) throw std::invalid_argument("make_ring: too many variables");
    return r;
}

static int mono_deg(const Mono& m) {
    int d = 0;
    for (unsigned char c : m) d += c;
    return d;
}

bool mono_less_glex(const Mono& a, const Mono& b) {
    int da = mono_deg(a), db = mono_deg(b);
    if (da != db) return da < db;
    return a < b;
}

Poly Poly::constant(RingPtr ring, const Rat& c) {
    Poly p(std::move(ring));
    if (!c.is_zero()) p.t_.emplace_back(Mono(p.ring_->nvars(), '\0'), c);
    return p;
}

Poly Poly::variable(RingPtr ring, std::size_t index, unsigned power) {
    Poly p(std::move(ring));
    if (index >= p.ring_->nvars()) throw std::out_of_range("Poly::variable");
    if (power > 255) throw std::invalid_argument("Poly::variable: power too large");
    Mono m(p.ring_->nvars(), '\0');
    m[index] = static_cast<char>(power);
    if (power == 0) return constant(p.ring_, Rat(1));
    p.t_.emplace_back(std::move(m), Rat(1));
    return p;
}

int Poly::total_degree() const {
    if (t_.empty()) return -1;
    // Terms are stored descending in graded lex, so the first is maximal.
    return mono_deg(t_.front().first);
}

int Poly::degree_in(const std::vector<std::size_t>& vars) const {
    int best = -1;
    for (const auto& [m, c] : t_) {
        (void)c;
        int d = 0;
        for (auto v : vars) d += static_cast<unsigned char>(m[v]);
        best = std::max(best, d);
    }
    return best;
}

void Poly::normalize_from(std::vector<std::pair<Mono, Rat>>&& raw) {
    std::sort(raw.begin(), raw.end(), [](const auto& x, const auto& y) {
        return mono_less_glex(y.first, x.first);  // descending
    });
    t_.clear();
    for (auto& [m, c] : raw) {
        if (!t_.empty() && t_.back().first == m)
            t_.back().second += c;
        else
            t_.emplace_back(std::move(m), c);
        if (!t_.empty() && t_.back().second.is_zero()) t_.pop_back();
    }
}

Poly Poly::from_map(RingPtr ring, std::map<Mono, Rat>&& acc) {
    Poly p(std::move(ring));
    std::vector<std::pair<Mono, Rat>> raw;
    raw.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) raw.emplace_back(m, c);
    p.normalize_from(std::move(raw));
    return p;
}

void Poly::add_term(const Mono& m, const Rat& c) {
    if (c.is_zero()) return;
    auto it = std::lower_bound(t_.begin(), t_.end(), m, [](const auto& term, const Mono& key) {
        return mono_less_glex(key, term.first);  // descending order
    });
    if (it != t_.end() && it->first == m) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    } else {
        t_.insert(it, {m, c});
    }
}

Poly Poly::operator+(const Poly& o) const {
    Poly r(ring_ ? ring_ : o.ring_);
    r.t_.reserve(t_.size() + o.t_.size());
    std::size_t i = 0, j = 0;
    while (i < t_.size() || j < o.t_.size()) {
        bool take_left;
        if (i == t_.size()) take_left = false;
        else if (j == o.t_.size()) take_left = true;
        else if (t_[i].first == o.t_[j].first) {
            Rat c = t_[i].second + o.t_[j].second;
            if (!c.is_zero()) r.t_.emplace_back(t_[i].first, c);
            ++i; ++j;
            continue;
        } else take_left = mono_less_glex(o.t_[j].first, t_[i].first);
        if (take_left) { r.t_.push_back(t_[i]); ++i; }
        else { r.t_.push_back(o.t_[j]); ++j; }
    }
    return r;
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& [m, c] : r.t_) { (void)m; c = -c; }
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

static Mono mono_mul(const Mono& a, const Mono& b) {
    Mono m(a);
    for (std::size_t i = 0; i < m.size(); ++i) {
        int e = static_cast<unsigned char>(a[i]) + static_cast<unsigned char>(b[i]);
        if (e > 255) throw std::overflow_error("monomial exponent overflow");
        m[i] = static_cast<char>(e);
    }
    return m;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r(ring_ ? ring_ : o.ring_);
    if (t_.empty() || o.t_.empty()) return r;
    std::unordered_map<Mono, Rat> acc;
    acc.reserve(t_.size() * std::min<std::size_t>(o.t_.size(), 64));
    for (const auto& [ma, ca] : t_)
        for (const auto& [mb, cb] : o.t_) {
            Rat c = ca * cb;
            auto [it, fresh] = acc.try_emplace(mono_mul(ma, mb), c);
            if (!fresh) it->second += c;
        }
    std::vector<std::pair<Mono, Rat>> raw;
    raw.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) raw.emplace_back(m, c);
    r.normalize_from(std::move(raw));
    return r;
}

Poly Poly::scaled(const Rat& c) const {
    Poly r(ring_);
    if (c.is_zero()) return r;
    r.t_ = t_;
    for (auto& [m, x] : r.t_) { (void)m; x *= c; }
    return r;
}

int Poly::weighted_degree(const std::vector<int>& weights) const {
    int best = -1;
    for (const auto& [m, c] : t_) {
        (void)c;
        int d = 0;
        for (std::size_t i = 0; i < m.size(); ++i) d += weights[i] * static_cast<unsigned char>(m[i]);
        best = std::max(best, d);
    }
    return best;
}

Poly Poly::truncate(const std::vector<int>& weights, int cutoff) const {
    Poly r(ring_);
    for (const auto& [m, c] : t_) {
        int d = 0;
        for (std::size_t i = 0; i < m.size(); ++i) d += weights[i] * static_cast<unsigned char>(m[i]);
        if (d <= cutoff) r.t_.emplace_back(m, c);
    }
    return r;
}

Poly Poly::mul_truncated(const Poly& o, const std::vector<int>& weights, int cutoff) const {
    Poly r(ring_ ? ring_ : o.ring_);
    if (t_.empty() || o.t_.empty()) return r;
    auto wdeg = [&weights](const Mono& m) {
        int d = 0;
        for (std::size_t i = 0; i < m.size(); ++i) d += weights[i] * static_cast<unsigned char>(m[i]);
        return d;
    };
    std::unordered_map<Mono, Rat> acc;
    for (const auto& [ma, ca] : t_) {
        int da = wdeg(ma);
        for (const auto& [mb, cb] : o.t_) {
            if (da + wdeg(mb) > cutoff) continue;
            Rat c = ca * cb;
            auto [it, fresh] = acc.try_emplace(mono_mul(ma, mb), c);
            if (!fresh) it->second += c;
        }
    }
    std::vector<std::pair<Mono, Rat>> raw;
    for (auto& [m, c] : acc)
        if (!c.is_zero()) raw.emplace_back(m, c);
    r.normalize_from(std::move(raw));
    return r;
}

Poly Poly::derivative(std::size_t var) const {
    Poly r(ring_);
    for (const auto& [m, c] : t_) {
        unsigned e = static_cast<unsigned char>(m[var]);
        if (e == 0) continue;
        Mono dm(m);
        dm[var] = static_cast<char>(e - 1);
        r.t_.emplace_back(std::move(dm), c * Rat(static_cast<long>(e)));
    }
    // Dropping one exponent preserves graded-lex order within equal degrees
    // only degree-wise; re-sort to stay canonical.
    std::vector<std::pair<Mono, Rat>> raw(r.t_.begin(), r.t_.end());
    r.normalize_from(std::move(raw));
    return r;
}

Rat Poly::eval(const RatVec& point) const {
    if (ring_ && point.size() != ring_->nvars())
        throw std::invalid_argument("Poly::eval: wrong number of coordinates");
    Rat total;
    for (const auto& [m, c] : t_) {
        Rat v = c;
        for (std::size_t i = 0; i < m.size(); ++i) {
            unsigned e = static_cast<unsigned char>(m[i]);
            for (unsigned k = 0; k < e; ++k) v *= point[i];
        }
        total += v;
    }
    return total;
}

Poly Poly::substituted(const RingPtr& target, const std::vector<Poly>& images) const {
    if (ring_ && images.size() != ring_->nvars())
        throw std::invalid_argument("Poly::substituted: wrong number of images");
    Poly total(target);
    for (const auto& [m, c] : t_) {
        Poly term = Poly::constant(target, c);
        for (std::size_t i = 0; i < m.size(); ++i) {
            unsigned e = static_cast<unsigned char>(m[i]);
            for (unsigned k = 0; k < e; ++k) term = term * images[i];
        }
        total = total + term;
    }
    return total;
}

Rat Poly::coeff(const Mono& m) const {
    for (const auto& [mm, c] : t_)
        if (mm == m) return c;
    return Rat(0);
}

Poly Poly::coeff_of(std::size_t var, unsigned k) const {
    Poly r(ring_);
    std::vector<std::pair<Mono, Rat>> raw;
    for (const auto& [m, c] : t_) {
        if (static_cast<unsigned char>(m[var]) != k) continue;
        Mono mm(m);
        mm[var] = 0;
        raw.emplace_back(std::move(mm), c);
    }
    r.normalize_from(std::move(raw));
    return r;
}

std::string Poly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : t_) {
        Rat a = c;
        if (!first) {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        bool unit = (a == Rat(1));
        bool any_var = false;
        for (unsigned char e : m)
            if (e) any_var = true;
        if (!unit || !any_var) os << a.str();
        bool star = !unit || !any_var;
        for (std::size_t i = 0; i < m.size(); ++i) {
            unsigned e = static_cast<unsigned char>(m[i]);
            if (!e) continue;
            if (star) os << "*";
            star = true;
            os << (ring_ ? ring_->vars[i] : "x" + std::to_string(i));
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

RatVec PolynomialMap::eval(const RatVec& point) const {
    RatVec out;
    out.reserve(components.size());
    for (const auto& p : components) out.push_back(p.eval(point));
    return out;
}

std::size_t PolynomialMap::jacobian_rank_at(const RatVec& point) const {
    RatMatrix j(components.size(), domain->nvars());
    for (std::size_t i = 0; i < components.size(); ++i)
        for (std::size_t v = 0; v < domain->nvars(); ++v)
            j.at(i, v) = components[i].derivative(v).eval(point);
    return j.rank();
}

}  // namespace slicecert
