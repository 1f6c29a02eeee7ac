#include "quandlelab/intmatrix.hpp"

#include <json.hpp>

#include "quandlelab/errors.hpp"

namespace ql {

namespace {
bool want_sparse(long rows, long cols, long nnz) {
    double cells = double(rows) * double(cols);
    return cells >= 1e4 && nnz < 0.05 * cells;
}
} // namespace

IntMatrix::IntMatrix(long rows, long cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw InputError("IntMatrix: negative dimension");
    dense_ = !want_sparse(rows, cols, 0);
    if (dense_) d_.assign(size_t(rows) * size_t(cols), 0);
}

IntMatrix IntMatrix::dense_from(long rows, long cols, std::vector<std::int64_t> entries) {
    if (entries.size() != size_t(rows) * size_t(cols))
        throw InputError("IntMatrix: entry count mismatch");
    IntMatrix m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.dense_ = true;
    m.d_ = std::move(entries);
    return m;
}

IntMatrix IntMatrix::from_triplets(long rows, long cols,
                                   const std::vector<std::tuple<long, long, std::int64_t>>& t) {
    IntMatrix m(rows, cols);
    for (auto& [i, j, v] : t) m.add(i, j, v);
    return m;
}

IntMatrix IntMatrix::identity(long n) {
    IntMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

long IntMatrix::nnz() const {
    if (!dense_) return long(s_.size());
    long c = 0;
    for (auto v : d_) c += (v != 0);
    return c;
}

std::int64_t IntMatrix::at(long i, long j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw InputError("IntMatrix::at: out of range");
    if (dense_) return d_[size_t(i) * cols_ + j];
    auto it = s_.find({i, j});
    return it == s_.end() ? 0 : it->second;
}

void IntMatrix::set(long i, long j, std::int64_t v) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw InputError("IntMatrix::set: out of range");
    if (dense_) {
        d_[size_t(i) * cols_ + j] = v;
    } else if (v == 0) {
        s_.erase({i, j});
    } else {
        s_[{i, j}] = v;
    }
}

void IntMatrix::add(long i, long j, std::int64_t v) {
    std::int64_t cur = at(i, j), out;
    if (__builtin_add_overflow(cur, v, &out)) throw OverflowError();
    set(i, j, out);
}

void IntMatrix::for_each_nonzero(const std::function<void(long, long, std::int64_t)>& fn) const {
    if (dense_) {
        for (long i = 0; i < rows_; ++i)
            for (long j = 0; j < cols_; ++j) {
                auto v = d_[size_t(i) * cols_ + j];
                if (v != 0) fn(i, j, v);
            }
    } else {
        for (auto& [k, v] : s_) fn(k.first, k.second, v);
    }
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for_each_nonzero([&](long i, long j, std::int64_t v) { t.set(j, i, v); });
    return t;
}

IntMatrix IntMatrix::multiplied_by(const IntMatrix& other) const {
    if (cols_ != other.rows_) throw InputError("IntMatrix: dimension mismatch in product");
    // Row-major accumulation over B's rows, exact with overflow checks.
    std::vector<std::map<long, std::int64_t>> brows(other.rows_);
    other.for_each_nonzero([&](long i, long j, std::int64_t v) { brows[i][j] = v; });
    IntMatrix c(rows_, other.cols_);
    std::map<long, std::int64_t> acc;
    long cur_row = -1;
    auto flush = [&]() {
        for (auto& [j, v] : acc)
            if (v != 0) c.set(cur_row, j, v);
        acc.clear();
    };
    for_each_nonzero([&](long i, long k, std::int64_t v) {
        if (i != cur_row) {
            if (cur_row >= 0) flush();
            cur_row = i;
        }
        for (auto& [j, w] : brows[k]) {
            std::int64_t p, s;
            if (__builtin_mul_overflow(v, w, &p)) throw OverflowError();
            if (__builtin_add_overflow(acc[j], p, &s)) throw OverflowError();
            acc[j] = s;
        }
    });
    if (cur_row >= 0) flush();
    return c;
}

bool IntMatrix::is_zero() const { return nnz() == 0; }

void IntMatrix::normalize_storage() {
    bool sparse = want_sparse(rows_, cols_, nnz());
    if (sparse == !dense_) return;
    if (sparse) {
        for (long i = 0; i < rows_; ++i)
            for (long j = 0; j < cols_; ++j) {
                auto v = d_[size_t(i) * cols_ + j];
                if (v != 0) s_[{i, j}] = v;
            }
        d_.clear();
        d_.shrink_to_fit();
        dense_ = false;
    } else {
        d_.assign(size_t(rows_) * size_t(cols_), 0);
        for (auto& [k, v] : s_) d_[size_t(k.first) * cols_ + k.second] = v;
        s_.clear();
        dense_ = true;
    }
}

bool IntMatrix::operator==(const IntMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    bool eq = true;
    for_each_nonzero([&](long i, long j, std::int64_t v) {
        if (other.at(i, j) != v) eq = false;
    });
    if (!eq) return false;
    other.for_each_nonzero([&](long i, long j, std::int64_t v) {
        if (at(i, j) != v) eq = false;
    });
    return eq;
}

std::string IntMatrix::to_json() const {
    nlohmann::json j;
    j["rows"] = rows_;
    j["cols"] = cols_;
    auto trips = nlohmann::json::array();
    for_each_nonzero([&](long i, long jj, std::int64_t v) {
        trips.push_back({i, jj, v});
    });
    j["triplets"] = std::move(trips);
    return j.dump();
}

IntMatrix IntMatrix::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    IntMatrix m(j.at("rows").get<long>(), j.at("cols").get<long>());
    for (auto& t : j.at("triplets"))
        m.add(t.at(0).get<long>(), t.at(1).get<long>(), t.at(2).get<std::int64_t>());
    return m;
}

} // namespace ql
