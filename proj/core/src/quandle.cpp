#include "quandlelab/quandle.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "quandlelab/errors.hpp"

namespace ql {

QuandleTable QuandleTable::from_op(std::vector<std::vector<int>> op,
                                   std::vector<std::string> labels) {
    QuandleTable q;
    q.n = int(op.size());
    for (auto& row : op)
        if (int(row.size()) != q.n) throw InputError("quandle table not square");
    for (auto& row : op)
        for (int v : row)
            if (v < 0 || v >= q.n) throw InputError("quandle table entry out of range");
    q.op = std::move(op);
    q.inv_op.assign(q.n, std::vector<int>(q.n, -1));
    for (int y = 0; y < q.n; ++y) {
        for (int x = 0; x < q.n; ++x) {
            int z = q.op[x][y];
            if (q.inv_op[z][y] != -1)
                throw InputError("column " + std::to_string(y) + " is not a permutation");
            q.inv_op[z][y] = x;
        }
    }
    if (!labels.empty() && int(labels.size()) != q.n)
        throw InputError("label count mismatch");
    q.labels = std::move(labels);
    return q;
}

std::string QuandleTable::to_json() const {
    nlohmann::json j;
    j["size"] = n;
    j["table"] = op;
    j["labels"] = labels;
    return j.dump();
}

QuandleTable QuandleTable::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    auto op = j.at("table").get<std::vector<std::vector<int>>>();
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    if (j.contains("size") && j.at("size").get<int>() != int(op.size()))
        throw InputError("quandle JSON: size field disagrees with table");
    return from_op(std::move(op), std::move(labels));
}

std::optional<AxiomViolation> check_axioms(const QuandleTable& q) {
    for (int a = 0; a < q.n; ++a)
        if (q.op[a][a] != a) return AxiomViolation{1, {a, -1, -1}};
    for (int y = 0; y < q.n; ++y) {
        std::vector<bool> hit(q.n, false);
        for (int x = 0; x < q.n; ++x) {
            int z = q.op[x][y];
            if (hit[z]) return AxiomViolation{2, {y, -1, -1}};
            hit[z] = true;
        }
    }
    for (int a = 0; a < q.n; ++a)
        for (int b = 0; b < q.n; ++b)
            for (int c = 0; c < q.n; ++c)
                if (q.op[q.op[a][b]][c] != q.op[q.op[a][c]][q.op[b][c]])
                    return AxiomViolation{3, {a, b, c}};
    return std::nullopt;
}

OrbitData orbits(const QuandleTable& q) {
    OrbitData od;
    od.orbit_id.assign(q.n, -1);
    int next = 0;
    for (int s = 0; s < q.n; ++s) {
        if (od.orbit_id[s] != -1) continue;
        od.orbit_id[s] = next;
        od.representatives.push_back(s);
        std::vector<int> queue{s};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int x = queue[qi];
            for (int y = 0; y < q.n; ++y)
                for (int z : {q.op[x][y], q.inv_op[x][y]})
                    if (od.orbit_id[z] == -1) {
                        od.orbit_id[z] = next;
                        queue.push_back(z);
                    }
        }
        ++next;
    }
    od.connected = (next <= 1);
    return od;
}

Perm right_translation(const QuandleTable& q, int y) {
    Perm p(q.n);
    for (int x = 0; x < q.n; ++x) p[x] = q.op[x][y];
    return p;
}

long type_of(const QuandleTable& q) {
    long t = 1;
    for (int y = 0; y < q.n; ++y) t = std::lcm(t, perm_order(right_translation(q, y)));
    return t;
}

PermGroup inner_group(const QuandleTable& q) {
    std::vector<Perm> gens;
    for (int y = 0; y < q.n; ++y) gens.push_back(right_translation(q, y));
    return PermGroup(q.n, std::move(gens));
}

// ---- Alexander ----------------------------------------------------------

namespace {

struct Module {
    std::vector<long> moduli;
    long size = 1;

    explicit Module(std::vector<long> m) : moduli(std::move(m)) {
        for (long mi : moduli) {
            if (mi < 2) throw InputError("module: moduli must be >= 2");
            size *= mi;
        }
    }
    std::vector<long> tuple_of(long idx) const {
        std::vector<long> t(moduli.size());
        for (size_t i = 0; i < moduli.size(); ++i) {
            t[i] = idx % moduli[i];
            idx /= moduli[i];
        }
        return t;
    }
    long index_of(const std::vector<long>& t) const {
        long idx = 0, mult = 1;
        for (size_t i = 0; i < moduli.size(); ++i) {
            long c = ((t[i] % moduli[i]) + moduli[i]) % moduli[i];
            idx += c * mult;
            mult *= moduli[i];
        }
        return idx;
    }
};

std::vector<long> apply_tmat(const std::vector<std::vector<long>>& tmat, const Module& m,
                             const std::vector<long>& x) {
    size_t r = m.moduli.size();
    std::vector<long> y(r, 0);
    for (size_t j = 0; j < r; ++j) {
        long acc = 0;
        for (size_t i = 0; i < r; ++i) acc += tmat[j][i] % m.moduli[j] * (x[i] % m.moduli[j]);
        y[j] = ((acc % m.moduli[j]) + m.moduli[j]) % m.moduli[j];
    }
    return y;
}

} // namespace

QuandleTable make_alexander(const std::vector<long>& moduli,
                            const std::vector<std::vector<long>>& tmat) {
    Module m(moduli);
    size_t r = moduli.size();
    if (tmat.size() != r) throw InputError("make_alexander: T dimension mismatch");
    for (auto& row : tmat)
        if (row.size() != r) throw InputError("make_alexander: T not square");
    // compatibility: m_i * T[j][i] == 0 mod m_j
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j)
            if ((moduli[i] * tmat[j][i]) % moduli[j] != 0)
                throw InputError("make_alexander: T does not respect the moduli");
    long n = m.size;
    if (n > 100000) throw CapError("make_alexander: module too large");
    // invertibility as a bijection of the module
    std::vector<long> image(n);
    std::vector<bool> hit(n, false);
    for (long idx = 0; idx < n; ++idx) {
        long t = m.index_of(apply_tmat(tmat, m, m.tuple_of(idx)));
        image[idx] = t;
        if (hit[t]) throw InputError("make_alexander: T is not invertible on the module");
        hit[t] = true;
    }
    QuandleTable q;
    q.n = int(n);
    q.op.assign(n, std::vector<int>(n));
    for (long x = 0; x < n; ++x) {
        auto tx = m.tuple_of(x);
        for (long y = 0; y < n; ++y) {
            auto ty = m.tuple_of(y);
            std::vector<long> diff(r);
            for (size_t i = 0; i < r; ++i) diff[i] = tx[i] - ty[i];
            auto td = apply_tmat(tmat, m, diff);
            for (size_t i = 0; i < r; ++i) td[i] += ty[i];
            q.op[x][y] = int(m.index_of(td));
        }
    }
    for (long x = 0; x < n; ++x) {
        auto t = m.tuple_of(x);
        std::string s;
        if (r == 1) s = std::to_string(t[0]);
        else {
            s = "(";
            for (size_t i = 0; i < r; ++i) s += (i ? "," : "") + std::to_string(t[i]);
            s += ")";
        }
        q.labels.push_back(s);
    }
    auto filled = QuandleTable::from_op(std::move(q.op), std::move(q.labels));
    filled.alexander = AlexanderData{moduli, tmat};
    return filled;
}

QuandleTable make_alexander_fq(const FqContext& fq, long omega) {
    if (omega == 0 || omega == 1)
        throw InputError("make_alexander_fq: omega must avoid {0,1}");
    int p = fq.p(), d = fq.d();
    std::vector<long> moduli(d, p);
    // column i of T = coordinates of omega * g^i
    std::vector<std::vector<long>> tmat(d, std::vector<long>(d, 0));
    long gi = 1;
    for (int i = 0; i < d; ++i) {
        long w = fq.mul(omega, gi);
        for (int j = 0; j < d; ++j) {
            tmat[j][i] = w % p;
            w /= p;
        }
        gi = fq.mul(gi, fq.gen());
    }
    auto q = make_alexander(moduli, tmat);
    for (long a = 0; a < fq.q(); ++a) q.labels[a] = fq.element_str(a);
    return q;
}

QuandleTable make_dihedral(long n) { return make_alexander({n}, {{n - 1}}); }

QuandleTable make_trivial(int n) {
    std::vector<std::vector<int>> op(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) op[x][y] = x;
    return QuandleTable::from_op(std::move(op));
}

bool alexander_is_connected(const AlexanderData& a) {
    Module m(a.moduli);
    size_t r = a.moduli.size();
    // image of (1 - T)
    std::set<long> image;
    for (long idx = 0; idx < m.size; ++idx) {
        auto x = m.tuple_of(idx);
        auto tx = apply_tmat(a.tmat, m, x);
        std::vector<long> y(r);
        for (size_t i = 0; i < r; ++i) y[i] = x[i] - tx[i];
        image.insert(m.index_of(y));
    }
    return long(image.size()) == m.size;
}

// ---- symplectic / spherical ---------------------------------------------

namespace {

std::pair<int, int> prime_power(long q) {
    if (q < 2) throw InputError("q must be a prime power >= 2");
    long p = 2;
    while (q % p != 0) ++p;
    int d = 0;
    long rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++d;
    }
    if (rest != 1) throw InputError("q is not a prime power");
    return {int(p), d};
}

std::vector<long> fq_tuple(long code, long q, int len) {
    std::vector<long> t(len);
    for (int i = 0; i < len; ++i) {
        t[i] = code % q;
        code /= q;
    }
    return t;
}

long fq_code(const std::vector<long>& t, long q) {
    long code = 0, mult = 1;
    for (long c : t) {
        code += c * mult;
        mult *= q;
    }
    return code;
}

std::string vec_label(const FqContext& fq, const std::vector<long>& t) {
    std::string s = "(";
    for (size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + fq.element_str(t[i]);
    return s + ")";
}

} // namespace

QuandleTable make_symplectic(long q, int n) {
    auto [p, d] = prime_power(q);
    if (p == 2) throw InputError("make_symplectic: q must be odd");
    if (n < 1) throw InputError("make_symplectic: n >= 1 required");
    FqContext fq(p, d);
    int dim = 2 * n;
    long total = 1;
    for (int i = 0; i < dim; ++i) {
        total *= q;
        if (total > 200000) throw CapError("make_symplectic: carrier too large");
    }
    long size = total - 1; // nonzero vectors
    auto form = [&](const std::vector<long>& x, const std::vector<long>& y) {
        long acc = 0;
        for (int i = 0; i < n; ++i) {
            long a = fq.mul(x[2 * i], y[2 * i + 1]);
            long b = fq.mul(x[2 * i + 1], y[2 * i]);
            acc = fq.add(acc, fq.sub(a, b));
        }
        return acc;
    };
    std::vector<std::vector<int>> op(size, std::vector<int>(size));
    std::vector<std::string> labels(size);
    std::vector<std::vector<long>> elems(size);
    for (long c = 1; c < total; ++c) elems[c - 1] = fq_tuple(c, q, dim);
    for (long xi = 0; xi < size; ++xi) labels[xi] = vec_label(fq, elems[xi]);
    for (long xi = 0; xi < size; ++xi)
        for (long yi = 0; yi < size; ++yi) {
            long s = form(elems[xi], elems[yi]);
            std::vector<long> z(dim);
            for (int i = 0; i < dim; ++i) z[i] = fq.add(fq.mul(s, elems[yi][i]), elems[xi][i]);
            op[xi][yi] = int(fq_code(z, q) - 1);
        }
    return QuandleTable::from_op(std::move(op), std::move(labels));
}

QuandleTable make_spherical(long q, int n) {
    auto [p, d] = prime_power(q);
    if (p == 2) throw InputError("make_spherical: q must be odd");
    if (n < 1) throw InputError("make_spherical: n >= 1 required");
    FqContext fq(p, d);
    int dim = n + 1;
    long total = 1;
    for (int i = 0; i < dim; ++i) {
        total *= q;
        if (total > 5000000) throw CapError("make_spherical: ambient space too large");
    }
    auto form = [&](const std::vector<long>& x, const std::vector<long>& y) {
        long acc = 0;
        for (int i = 0; i < dim; ++i) acc = fq.add(acc, fq.mul(x[i], y[i]));
        return acc;
    };
    std::vector<std::vector<long>> elems;
    std::map<long, int> index_of;
    for (long c = 0; c < total; ++c) {
        auto t = fq_tuple(c, q, dim);
        if (form(t, t) == 1) {
            index_of[c] = int(elems.size());
            elems.push_back(std::move(t));
        }
    }
    long size = long(elems.size());
    if (size > 4096) throw CapError("make_spherical: sphere too large");
    std::vector<std::vector<int>> op(size, std::vector<int>(size));
    std::vector<std::string> labels(size);
    for (long xi = 0; xi < size; ++xi) labels[xi] = vec_label(fq, elems[xi]);
    long two = fq.scalar(2);
    for (long xi = 0; xi < size; ++xi)
        for (long yi = 0; yi < size; ++yi) {
            long s = fq.mul(two, form(elems[xi], elems[yi]));
            std::vector<long> z(dim);
            for (int i = 0; i < dim; ++i)
                z[i] = fq.sub(fq.mul(s, elems[yi][i]), elems[xi][i]);
            op[xi][yi] = index_of.at(fq_code(z, q));
        }
    auto out = QuandleTable::from_op(std::move(op), std::move(labels));
    if (n == 1) out.notes.push_back("spherical quandle with n = 1 (results in the literature start at n >= 2)");
    return out;
}

QuandleTable make_conjugation(const std::vector<Perm>& group_generators, const Perm& seed,
                              long class_cap) {
    if (group_generators.empty()) throw InputError("make_conjugation: no generators");
    size_t deg = group_generators[0].size();
    for (auto& g : group_generators)
        if (g.size() != deg) throw InputError("make_conjugation: degree mismatch");
    if (seed.size() != deg) throw InputError("make_conjugation: seed degree mismatch");
    PermGroup grp(int(deg), group_generators);
    if (!grp.contains(seed)) throw InputError("make_conjugation: seed not in generated group");

    std::set<Perm> cls{seed};
    std::vector<Perm> queue{seed};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        for (auto& g : group_generators)
            for (const Perm& gg : {g, perm_inverse(g)}) {
                Perm c = perm_mul(perm_mul(perm_inverse(gg), queue[qi]), gg);
                if (cls.insert(c).second) {
                    if (long(cls.size()) > class_cap)
                        throw CapError("make_conjugation: class size cap exceeded");
                    queue.push_back(std::move(c));
                }
            }
    }
    std::vector<Perm> elems(cls.begin(), cls.end()); // sorted lexicographically
    std::map<Perm, int> idx;
    for (size_t i = 0; i < elems.size(); ++i) idx[elems[i]] = int(i);
    int n = int(elems.size());
    std::vector<std::vector<int>> op(n, std::vector<int>(n));
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = perm_cycle_str(elems[i]);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            Perm z = perm_mul(perm_mul(perm_inverse(elems[y]), elems[x]), elems[y]);
            op[x][y] = idx.at(z);
        }
    return QuandleTable::from_op(std::move(op), std::move(labels));
}

bool quandles_isomorphic(const QuandleTable& a, const QuandleTable& b) {
    if (a.n != b.n) return false;
    int n = a.n;
    if (n > 10) throw CapError("quandles_isomorphic: brute force capped at n = 10");
    std::vector<int> f(n, -1), used(n, 0);
    // backtracking over images, checking op whenever both arguments mapped
    std::function<bool(int)> rec = [&](int k) -> bool {
        if (k == n) return true;
        for (int img = 0; img < n; ++img) {
            if (used[img]) continue;
            f[k] = img;
            used[img] = 1;
            bool ok = true;
            for (int i = 0; i <= k && ok; ++i)
                for (int j = 0; j <= k && ok; ++j) {
                    int z = a.op[i][j];
                    if (z <= k && f[z] != b.op[f[i]][f[j]]) ok = false;
                    if (z > k) continue;
                }
            if (ok && rec(k + 1)) return true;
            used[img] = 0;
            f[k] = -1;
        }
        return false;
    };
    return rec(0);
}

} // namespace ql
