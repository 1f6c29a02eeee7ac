#include "quandlelab/snf.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "quandlelab/errors.hpp"

namespace ql {

namespace {

// ---- checked int64 / mpz arithmetic shims ------------------------------

inline std::int64_t chk_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError();
    return r;
}
inline std::int64_t chk_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError();
    return r;
}
inline std::int64_t chk_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError();
    return r;
}
inline std::int64_t chk_neg(std::int64_t a) { return chk_sub(0, a); }

inline mpz_class chk_add(const mpz_class& a, const mpz_class& b) { return a + b; }
inline mpz_class chk_sub(const mpz_class& a, const mpz_class& b) { return a - b; }
inline mpz_class chk_mul(const mpz_class& a, const mpz_class& b) { return a * b; }
inline mpz_class chk_neg(const mpz_class& a) { return -a; }

inline bool is_zero(std::int64_t a) { return a == 0; }
inline bool is_zero(const mpz_class& a) { return sgn(a) == 0; }
inline bool abs_is_one(std::int64_t a) { return a == 1 || a == -1; }
inline bool abs_is_one(const mpz_class& a) { return mpz_cmpabs_ui(a.get_mpz_t(), 1) == 0; }
inline int sgn_of(std::int64_t v) { return v < 0 ? -1 : v > 0 ? 1 : 0; }
inline int sgn_of(const mpz_class& v) { return sgn(v); }

inline unsigned long long mag_u64(std::int64_t x) {
    return x < 0 ? 0ULL - (unsigned long long)x : (unsigned long long)x;
}
inline int cmp_abs(std::int64_t a, std::int64_t b) {
    auto ma = mag_u64(a), mb = mag_u64(b);
    return ma < mb ? -1 : ma > mb ? 1 : 0;
}
inline int cmp_abs(const mpz_class& a, const mpz_class& b) {
    return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

// Nearest-integer division: a = q*p + r with |r| <= |p|/2. Requires p != 0.
inline void divround(std::int64_t a, std::int64_t p, std::int64_t& q, std::int64_t& r) {
    q = a / p;
    r = a % p;
    if (r != 0 && 2 * mag_u64(r) > mag_u64(p)) {
        q = chk_add(q, ((r > 0) == (p > 0)) ? 1 : -1);
        r = chk_sub(a, chk_mul(q, p));
    }
}
inline void divround(const mpz_class& a, const mpz_class& p, mpz_class& q, mpz_class& r) {
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    if (sgn(r) != 0) {
        mpz_class twice = 2 * abs(r);
        if (cmp_abs(twice, p) > 0) {
            q += (sgn(r) > 0) == (sgn(p) > 0) ? 1 : -1;
            r = a - q * p;
        }
    }
}

inline std::int64_t to_i64(std::int64_t v) { return v; }
inline std::int64_t to_i64(const mpz_class& v) {
    if (!v.fits_slong_p()) throw CapError("SNF entry exceeds int64 range");
    return v.get_si();
}

template <class T>
void ext_gcd(const T& a, const T& b, T& g, T& x, T& y) {
    T r0 = a, r1 = b, x0 = T(1), x1 = T(0), y0 = T(0), y1 = T(1);
    while (!is_zero(r1)) {
        T q, rem;
        divround(r0, r1, q, rem);
        T x2 = chk_sub(x0, chk_mul(q, x1));
        T y2 = chk_sub(y0, chk_mul(q, y1));
        r0 = r1; r1 = rem;
        x0 = x1; x1 = x2;
        y0 = y1; y1 = y2;
    }
    g = r0; x = x0; y = y0;
    if (!is_zero(g) && sgn_of(g) < 0) {
        g = chk_neg(g);
        x = chk_neg(x);
        y = chk_neg(y);
    }
}

// ---- elimination engine -------------------------------------------------

template <class T>
struct Engine {
    long R, C;
    std::vector<std::map<long, T>> rows;  // row -> (col -> value)
    std::vector<std::set<long>> colrows;  // col -> rows holding a nonzero
    std::size_t nnz = 0, max_fill;
    bool wU, wUi, wV, wVi;
    std::vector<std::vector<T>> U, Ui, V, Vi;

    Engine(const IntMatrix& M, const SnfOptions& o)
        : R(M.rows()), C(M.cols()), max_fill(o.max_fill),
          wU(o.want_U), wUi(o.want_Uinv), wV(o.want_V), wVi(o.want_Vinv) {
        rows.resize(R);
        colrows.resize(C);
        M.for_each_nonzero([&](long i, long j, std::int64_t v) {
            rows[i][j] = T(v);
            colrows[j].insert(i);
            ++nnz;
        });
        auto ident = [](long n) {
            std::vector<std::vector<T>> m(n, std::vector<T>(n, T(0)));
            for (long i = 0; i < n; ++i) m[i][i] = T(1);
            return m;
        };
        if (wU) U = ident(R);
        if (wUi) Ui = ident(R);
        if (wV) V = ident(C);
        if (wVi) Vi = ident(C);
    }

    void put(long r, long c, const T& v) {
        auto it = rows[r].find(c);
        if (is_zero(v)) {
            if (it != rows[r].end()) {
                rows[r].erase(it);
                colrows[c].erase(r);
                --nnz;
            }
        } else if (it == rows[r].end()) {
            rows[r].emplace(c, v);
            colrows[c].insert(r);
            if (++nnz > max_fill) throw CapError("SNF fill-in cap exceeded");
        } else {
            it->second = v;
        }
    }

    // row[dst] -= q * row[src]
    void row_op(long dst, long src, const T& q) {
        if (is_zero(q)) return;
        std::vector<std::pair<long, T>> src_entries(rows[src].begin(), rows[src].end());
        for (auto& [c, v] : src_entries) {
            auto it = rows[dst].find(c);
            T nv = (it == rows[dst].end()) ? chk_neg(chk_mul(q, v))
                                           : chk_sub(it->second, chk_mul(q, v));
            put(dst, c, nv);
        }
        if (wU)
            for (long j = 0; j < R; ++j)
                U[dst][j] = chk_sub(U[dst][j], chk_mul(q, U[src][j]));
        if (wUi)
            for (long t = 0; t < R; ++t)
                Ui[t][src] = chk_add(Ui[t][src], chk_mul(q, Ui[t][dst]));
    }

    // col[dst] -= q * col[src]
    void col_op(long dst, long src, const T& q) {
        if (is_zero(q)) return;
        std::vector<long> src_rows(colrows[src].begin(), colrows[src].end());
        for (long r : src_rows) {
            const T v = rows[r].at(src);
            auto it = rows[r].find(dst);
            T nv = (it == rows[r].end()) ? chk_neg(chk_mul(q, v))
                                         : chk_sub(it->second, chk_mul(q, v));
            put(r, dst, nv);
        }
        if (wV)
            for (long i = 0; i < C; ++i)
                V[i][dst] = chk_sub(V[i][dst], chk_mul(q, V[i][src]));
        if (wVi)
            for (long j = 0; j < C; ++j)
                Vi[src][j] = chk_add(Vi[src][j], chk_mul(q, Vi[dst][j]));
    }

    void swap_rows(long a, long b) {
        if (a == b) return;
        for (auto& [c, v] : rows[a]) colrows[c].erase(a);
        for (auto& [c, v] : rows[b]) colrows[c].erase(b);
        std::swap(rows[a], rows[b]);
        for (auto& [c, v] : rows[a]) colrows[c].insert(a);
        for (auto& [c, v] : rows[b]) colrows[c].insert(b);
        if (wU) std::swap(U[a], U[b]);
        if (wUi)
            for (long t = 0; t < R; ++t) std::swap(Ui[t][a], Ui[t][b]);
    }

    void swap_cols(long a, long b) {
        if (a == b) return;
        std::vector<std::pair<long, T>> ca, cb;
        for (long r : colrows[a]) ca.push_back({r, rows[r].at(a)});
        for (long r : colrows[b]) cb.push_back({r, rows[r].at(b)});
        for (auto& [r, v] : ca) { rows[r].erase(a); --nnz; }
        for (auto& [r, v] : cb) { rows[r].erase(b); --nnz; }
        colrows[a].clear();
        colrows[b].clear();
        for (auto& [r, v] : ca) put(r, b, v);
        for (auto& [r, v] : cb) put(r, a, v);
        if (wV)
            for (long i = 0; i < C; ++i) std::swap(V[i][a], V[i][b]);
        if (wVi) std::swap(Vi[a], Vi[b]);
    }

    void negate_row(long r) {
        for (auto& [c, v] : rows[r]) v = chk_neg(v);
        if (wU)
            for (long j = 0; j < R; ++j) U[r][j] = chk_neg(U[r][j]);
        if (wUi)
            for (long t = 0; t < R; ++t) Ui[t][r] = chk_neg(Ui[t][r]);
    }

    // Pivot: min |value|, then min (row nnz + col nnz), first (r, c) on ties.
    bool find_pivot(long k, long& pr, long& pc) {
        bool found = false;
        T bv(0);
        long bf = 0;
        for (long r = k; r < R; ++r) {
            long rn = long(rows[r].size());
            for (auto& [c, v] : rows[r]) {
                long fill = rn + long(colrows[c].size());
                int ca = found ? cmp_abs(v, bv) : -1;
                if (ca < 0 || (ca == 0 && fill < bf)) {
                    found = true;
                    bv = v;
                    bf = fill;
                    pr = r;
                    pc = c;
                    if (abs_is_one(bv) && bf == 2) return true;
                }
            }
        }
        return found;
    }

    // Zeroes row/col k except the pivot, gcd-reducing when needed.
    void clean_pivot(long k) {
        while (true) {
            // column pass
            while (colrows[k].size() > 1) {
                auto it = colrows[k].begin();
                long r = (*it == k) ? *std::next(it) : *it;
                T p = rows[k].at(k), q, rem;
                divround(rows[r].at(k), p, q, rem);
                row_op(r, k, q);
                if (!is_zero(rem)) swap_rows(r, k); // strictly smaller pivot
            }
            // row pass; a column swap re-dirties the pivot column
            bool swapped_col = false;
            while (rows[k].size() > 1) {
                auto it = rows[k].begin();
                long c = (it->first == k) ? std::next(it)->first : it->first;
                T p = rows[k].at(k), q, rem;
                divround(rows[k].at(c), p, q, rem);
                col_op(c, k, q);
                if (!is_zero(rem)) {
                    swap_cols(c, k);
                    swapped_col = true;
                    break;
                }
            }
            if (!swapped_col && colrows[k].size() == 1 && rows[k].size() == 1) return;
        }
    }

    SnfResult run() {
        long limit = std::min(R, C);
        std::vector<T> diag;
        for (long k = 0; k < limit; ++k) {
            long pr = 0, pc = 0;
            if (!find_pivot(k, pr, pc)) break;
            swap_rows(pr, k);
            swap_cols(pc, k);
            clean_pivot(k);
            diag.push_back(rows[k].at(k));
        }
        long rank = long(diag.size());
        for (long i = 0; i < rank; ++i)
            if (sgn_of(diag[i]) < 0) {
                negate_row(i);
                diag[i] = chk_neg(diag[i]);
            }
        // divisibility chain via 2x2 diagonal repairs
        for (long i = 0; i < rank; ++i)
            for (long j = i + 1; j < rank; ++j) {
                T q0, r0;
                divround(diag[j], diag[i], q0, r0);
                if (is_zero(r0)) continue;
                const T a = diag[i], b = diag[j];
                T g, x, y;
                ext_gcd(a, b, g, x, y);
                T ag = a / g, bg = b / g;
                // P = [[x, y], [-b/g, a/g]], Q = [[1, -y*b/g], [1, x*a/g]]:
                // P*diag(a,b)*Q = diag(g, ab/g), det P = det Q = 1.
                if (wU)
                    for (long t = 0; t < R; ++t) {
                        T ui = U[i][t], uj = U[j][t];
                        U[i][t] = chk_add(chk_mul(x, ui), chk_mul(y, uj));
                        U[j][t] = chk_sub(chk_mul(ag, uj), chk_mul(bg, ui));
                    }
                if (wUi)
                    for (long t = 0; t < R; ++t) {
                        // P^-1 = [[a/g, -y], [b/g, x]]
                        T wi = Ui[t][i], wj = Ui[t][j];
                        Ui[t][i] = chk_add(chk_mul(ag, wi), chk_mul(bg, wj));
                        Ui[t][j] = chk_add(chk_mul(chk_neg(y), wi), chk_mul(x, wj));
                    }
                if (wV)
                    for (long t = 0; t < C; ++t) {
                        T vi = V[t][i], vj = V[t][j];
                        V[t][i] = chk_add(vi, vj);
                        V[t][j] = chk_sub(chk_mul(chk_mul(x, ag), vj),
                                          chk_mul(chk_mul(y, bg), vi));
                    }
                if (wVi)
                    for (long t = 0; t < C; ++t) {
                        // Q^-1 = [[x*a/g, y*b/g], [-1, 1]]
                        T wi = Vi[i][t], wj = Vi[j][t];
                        Vi[i][t] = chk_add(chk_mul(chk_mul(x, ag), wi),
                                           chk_mul(chk_mul(y, bg), wj));
                        Vi[j][t] = chk_sub(wj, wi);
                    }
                diag[i] = g;
                diag[j] = chk_mul(ag, b);
                put(i, i, diag[i]);
                put(j, j, diag[j]);
            }

        SnfResult out;
        out.rows = R;
        out.cols = C;
        out.rank = rank;
        for (auto& d : diag) out.factors.push_back(to_i64(d));
        auto pack = [](const std::vector<std::vector<T>>& m) {
            long n = long(m.size());
            IntMatrix d(n, n);
            for (long i = 0; i < n; ++i)
                for (long j = 0; j < n; ++j)
                    if (!is_zero(m[i][j])) d.set(i, j, to_i64(m[i][j]));
            return d;
        };
        if (wU) out.U = pack(U);
        if (wUi) out.Uinv = pack(Ui);
        if (wV) out.V = pack(V);
        if (wVi) out.Vinv = pack(Vi);
        return out;
    }
};

} // namespace

IntMatrix SnfResult::diagonal() const {
    IntMatrix s(rows, cols);
    for (long i = 0; i < rank; ++i) s.set(i, i, factors[i]);
    return s;
}

AbGroup SnfResult::quotient_group(long ambient_rank) const {
    std::vector<std::int64_t> tor;
    for (auto d : factors)
        if (d > 1) tor.push_back(d);
    return AbGroup(ambient_rank - rank, std::move(tor));
}

SnfResult smith_normal_form(const IntMatrix& M, const SnfOptions& opts) {
    try {
        return Engine<std::int64_t>(M, opts).run();
    } catch (const OverflowError&) {
        return Engine<mpz_class>(M, opts).run();
    }
}

std::vector<std::int64_t>
HomologyClassMap::coords_of(const std::vector<std::int64_t>& cycle) const {
    long n = ker_proj_.cols();
    if (long(cycle.size()) != n) throw InputError("cycle length mismatch");
    long k = ker_proj_.rows();
    std::vector<std::int64_t> z(k, 0);
    ker_proj_.for_each_nonzero([&](long i, long j, std::int64_t v) {
        z[i] = chk_add(z[i], chk_mul(v, cycle[j]));
    });
    std::vector<std::int64_t> w(k, 0);
    u3_.for_each_nonzero([&](long i, long j, std::int64_t v) {
        w[i] = chk_add(w[i], chk_mul(v, z[j]));
    });
    std::vector<std::int64_t> out;
    for (long r : free_rows_) out.push_back(w[r]);
    for (auto& [r, d] : torsion_rows_) out.push_back(((w[r] % d) + d) % d);
    return out;
}

HomologyResult homology_at(const IntMatrix& d_in, const IntMatrix& d_out, bool want_classes) {
    if (d_in.rows() != d_out.cols())
        throw InputError("homology_at: chain dimensions disagree");
    if (!d_out.multiplied_by(d_in).is_zero())
        throw ConsistencyError("homology_at: d_out * d_in != 0");
    long n = d_out.cols();
    if (!want_classes) {
        long r_out = rank_of(d_out);
        auto s_in = smith_normal_form(d_in);
        return {s_in.quotient_group(n - r_out), std::nullopt};
    }
    SnfOptions o2;
    o2.want_Vinv = true;
    auto s2 = smith_normal_form(d_out, o2);
    long r2 = s2.rank, k = n - r2;
    // Kernel-lattice coordinates of a cycle = bottom k rows of V2^-1.
    IntMatrix proj(k, n);
    s2.Vinv->for_each_nonzero([&](long i, long j, std::int64_t v) {
        if (i >= r2) proj.set(i - r2, j, v);
    });
    // Y = proj * d_in, column by column against sparse d_in.
    std::vector<std::vector<std::pair<long, std::int64_t>>> incols(d_in.cols());
    d_in.for_each_nonzero([&](long i, long j, std::int64_t v) { incols[j].push_back({i, v}); });
    std::vector<std::vector<std::int64_t>> projd(k, std::vector<std::int64_t>(n, 0));
    proj.for_each_nonzero([&](long i, long j, std::int64_t v) { projd[i][j] = v; });
    IntMatrix Y(k, d_in.cols());
    for (long c = 0; c < d_in.cols(); ++c)
        for (long i = 0; i < k; ++i) {
            std::int64_t acc = 0;
            for (auto& [r, v] : incols[c]) acc = chk_add(acc, chk_mul(projd[i][r], v));
            if (acc != 0) Y.set(i, c, acc);
        }
    SnfOptions o3;
    o3.want_U = true;
    auto s3 = smith_normal_form(Y, o3);

    HomologyClassMap map;
    map.ker_proj_ = std::move(proj);
    map.u3_ = *s3.U;
    for (long i = 0; i < s3.rank; ++i)
        if (s3.factors[i] > 1) map.torsion_rows_.push_back({i, s3.factors[i]});
    for (long i = s3.rank; i < k; ++i) map.free_rows_.push_back(i);
    map.group_ = s3.quotient_group(k);
    AbGroup g = map.group_;
    return {std::move(g), std::move(map)};
}

} // namespace ql
