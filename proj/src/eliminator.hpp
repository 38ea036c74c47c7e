#pragma once

// Incremental fraction-free column elimination over Z[x].

#include "zpoly.hpp"

#include <optional>
#include <vector>

namespace pseudolin::detail {

/// z = scale * v, with z integral, jointly primitive and without common
/// polynomial factor.
struct ClearedColumn {
    std::vector<ZPoly> z;
    RatFun scale;
};
ClearedColumn clear_column(const std::vector<RatFun>& v);
ClearedColumn clear_column(const std::vector<Poly>& v);

class ColumnEliminator {
public:
    explicit ColumnEliminator(std::size_t rows) : rows_(rows) {}

    std::size_t rows() const { return rows_; }
    std::size_t rank() const { return steps_.size(); }

    /// Runs the stored elimination steps on a fresh column.
    std::vector<ZPoly> reduce(std::vector<ZPoly> c) const;
    /// True when a reduced column vanishes off the pivot rows.
    bool in_span(const std::vector<ZPoly>& reduced) const;
    /// Stores a reduced column that is not in the span.
    void push(std::vector<ZPoly> reduced);
    /// For a reduced column in the span, returns (y_0, ..., y_{r-1}, d)
    /// with sum_j y_j c_j = d c and d the last pivot (d = 1 when r = 0).
    std::vector<ZPoly> back_substitute(const std::vector<ZPoly>& reduced) const;

    /// reduce + in_span + push in one call; returns false when dependent.
    bool add(std::vector<ZPoly> c);

private:
    struct Step {
        std::size_t pivot_row;
        std::vector<ZPoly> column;
    };
    const ZPoly& pivot(std::size_t k) const { return steps_[k].column[steps_[k].pivot_row]; }

    std::size_t rows_;
    std::vector<Step> steps_;
    std::vector<bool> used_;
};

} // namespace pseudolin::detail
