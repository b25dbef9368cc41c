#include "slicecert/rootsystem.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace slicecert {

int RootSystem::height(const RootVec& v) {
    int h = 0;
    for (int c : v) h += c;
    return h;
}

int RootSystem::pair_coroot(const RootVec& v, int i) const {
    int s = 0;
    for (int j = 0; j < rank; ++j) s += cartan[i][j] * v[j];
    return s;
}

int RootSystem::bilinear(const RootVec& v, const RootVec& w) const {
    // (alpha_i, alpha_j) = d_i * cartan[i][j]
    int s = 0;
    for (int i = 0; i < rank; ++i) {
        if (!v[i]) continue;
        for (int j = 0; j < rank; ++j)
            if (w[j]) s += v[i] * d[i] * cartan[i][j] * w[j];
    }
    return s;
}

RootVec RootSystem::reflect_simple(int i, const RootVec& v) const {
    RootVec r = v;
    r[i] -= pair_coroot(v, i);
    return r;
}

bool RootSystem::is_root(const RootVec& v) const {
    return lookup(v).found;
}

RootSystem::Lookup RootSystem::lookup(const RootVec& v) const {
    auto it = pos_index.find(v);
    if (it != pos_index.end()) return {true, true, it->second};
    RootVec neg(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
    it = pos_index.find(neg);
    if (it != pos_index.end()) return {true, false, it->second};
    return {false, false, -1};
}

RootVec RootSystem::highest_root() const {
    return positives.back();  // maximal height is last in the root order
}

int RootSystem::string_down(const RootVec& alpha, const RootVec& beta) const {
    int p = 0;
    RootVec v = beta;
    for (;;) {
        for (int i = 0; i < rank; ++i) v[i] -= alpha[i];
        if (!is_root(v)) break;
        ++p;
    }
    return p;
}

std::vector<int> RootSystem::coroot_coords(const RootVec& v) const {
    int dv2 = norm2(v);
    std::vector<int> out(rank);
    for (int i = 0; i < rank; ++i) {
        long num = 2L * v[i] * d[i];
        if (num % dv2 != 0) throw std::logic_error("coroot_coords: non-integral coroot");
        out[i] = static_cast<int>(num / dv2);
    }
    return out;
}

namespace {

struct TypeData {
    std::vector<std::vector<int>> cartan;
    std::vector<int> d;
};

// cartan[i][j] = <alpha_j, alpha_i^vee> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i).
TypeData type_data(char t, int n) {
    TypeData td;
    td.cartan.assign(n, std::vector<int>(n, 0));
    td.d.assign(n, 1);
    auto edge = [&](int i, int j) { td.cartan[i][j] = -1; td.cartan[j][i] = -1; };
    for (int i = 0; i < n; ++i) td.cartan[i][i] = 2;
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) edge(i, i + 1);
    };
    switch (t) {
        case 'A':
            if (n < 1) throw std::invalid_argument("A_n needs n >= 1");
            chain(n);
            break;
        case 'B':
            // alpha_n short; alpha_1..alpha_{n-1} long.
            if (n < 2) throw std::invalid_argument("B_n needs n >= 2");
            chain(n - 1);
            td.cartan[n - 1][n - 2] = -2;  // <alpha_{n-1}, alpha_n^vee>
            td.cartan[n - 2][n - 1] = -1;
            for (int i = 0; i < n - 1; ++i) td.d[i] = 2;
            break;
        case 'C':
            // alpha_n long; alpha_1..alpha_{n-1} short.
            if (n < 2) throw std::invalid_argument("C_n needs n >= 2");
            chain(n - 1);
            td.cartan[n - 1][n - 2] = -1;
            td.cartan[n - 2][n - 1] = -2;  // <alpha_n, alpha_{n-1}^vee>
            td.d[n - 1] = 2;
            break;
        case 'D':
            if (n < 3) throw std::invalid_argument("D_n needs n >= 3");
            chain(n - 1);
            edge(n - 3, n - 1);
            break;
        case 'E':
            if (n < 6 || n > 8) throw std::invalid_argument("E_n needs n in {6,7,8}");
            // Bourbaki: chain 1-3-4-5-...-n with 2 attached to 4.
            edge(0, 2);
            for (int i = 2; i + 1 < n; ++i) edge(i, i + 1);
            edge(1, 3);
            break;
        case 'F':
            if (n != 4) throw std::invalid_argument("F_n needs n = 4");
            edge(0, 1);
            edge(2, 3);
            td.cartan[1][2] = -1;  // alpha_2 long, alpha_3 short
            td.cartan[2][1] = -2;
            td.d[0] = td.d[1] = 2;
            break;
        case 'G':
            if (n != 2) throw std::invalid_argument("G_n needs n = 2");
            // alpha_1 short, alpha_2 long (highest root 3a1 + 2a2).
            td.cartan[0][1] = -3;  // <alpha_2, alpha_1^vee>
            td.cartan[1][0] = -1;
            td.d[1] = 3;
            break;
        default:
            throw std::invalid_argument("unknown type letter");
    }
    return td;
}

}  // namespace

RootSystem build_root_system(char type_letter, int rank) {
    RootSystem rs;
    rs.type_letter = type_letter;
    rs.rank = rank;
    auto td = type_data(type_letter, rank);
    rs.cartan = std::move(td.cartan);
    rs.d = std::move(td.d);

    std::set<RootVec> pos;
    std::vector<RootVec> frontier;
    for (int i = 0; i < rank; ++i) {
        RootVec a(rank, 0);
        a[i] = 1;
        pos.insert(a);
        frontier.push_back(a);
    }
    while (!frontier.empty()) {
        std::vector<RootVec> next;
        for (const auto& v : frontier) {
            for (int i = 0; i < rank; ++i) {
                RootVec w = rs.reflect_simple(i, v);
                bool positive = false;
                for (int c : w)
                    if (c > 0) { positive = true; break; }
                if (!positive) continue;
                if (pos.insert(w).second) next.push_back(w);
            }
        }
        frontier = std::move(next);
    }
    rs.positives.assign(pos.begin(), pos.end());
    std::sort(rs.positives.begin(), rs.positives.end(), [](const RootVec& a, const RootVec& b) {
        int ha = RootSystem::height(a), hb = RootSystem::height(b);
        if (ha != hb) return ha < hb;
        return a < b;
    });
    for (int i = 0; i < rs.n_pos(); ++i) rs.pos_index[rs.positives[i]] = i;
    return rs;
}

}  // namespace slicecert
