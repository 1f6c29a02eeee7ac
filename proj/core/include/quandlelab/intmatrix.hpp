#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ql {

// Exact integer matrix. Storage is dense (row-major) or sparse
// (coordinate map) chosen by a density threshold; both represent the
// same matrix and compare equal mathematically.
class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0), dense_(true) {}
    IntMatrix(long rows, long cols);

    static IntMatrix dense_from(long rows, long cols, std::vector<std::int64_t> entries);
    static IntMatrix from_triplets(long rows, long cols,
                                   const std::vector<std::tuple<long, long, std::int64_t>>& t);
    static IntMatrix identity(long n);
    static IntMatrix zero(long rows, long cols) { return IntMatrix(rows, cols); }

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    bool is_sparse() const { return !dense_; }
    long nnz() const;

    std::int64_t at(long i, long j) const;
    void set(long i, long j, std::int64_t v);
    void add(long i, long j, std::int64_t v);

    // Visits nonzeros in row-major order.
    void for_each_nonzero(const std::function<void(long, long, std::int64_t)>& fn) const;

    IntMatrix transposed() const;
    IntMatrix multiplied_by(const IntMatrix& other) const;
    bool is_zero() const;

    // Re-selects storage per the density rule: >= 10^4 cells and
    // density < 5% goes sparse.
    void normalize_storage();

    bool operator==(const IntMatrix& other) const;

    // {"rows": r, "cols": c, "triplets": [[i,j,v],...]}
    std::string to_json() const;
    static IntMatrix from_json(const std::string& text);

  private:
    long rows_, cols_;
    bool dense_;
    std::vector<std::int64_t> d_;                       // dense payload
    std::map<std::pair<long, long>, std::int64_t> s_;   // sparse payload
};

} // namespace ql
