#pragma once

// The strip weight on R^2 and exact rational rectangle geometry. The weight
// is constant on unit columns [m, m+1) (mirrored for x < 0) crossed with at
// most four y-layers, so sups and integrals over rectangle unions reduce to
// finitely many cells.

#include "wlp/dyadic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wlp {

struct PlanePoint {
    Rational x;
    Rational y;
    friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

/// [x0, x1] x [y0, y1] with x0 < x1, y0 < y1. Boundaries carry no measure.
struct Rect {
    Rational x0, y0, x1, y1;

    Rational area() const { return (x1 - x0) * (y1 - y0); }
    friend bool operator==(const Rect&, const Rect&) = default;
};

/// Finite union of rectangles. The set operations return the canonical
/// non-overlapping form; equality compares canonical forms.
class CellRegion {
public:
    CellRegion() = default;
    explicit CellRegion(std::vector<Rect> rects);
    static CellRegion box(const Rational& x0, const Rational& y0, const Rational& x1, const Rational& y1);

    const std::vector<Rect>& rects() const noexcept { return rects_; }
    bool empty() const noexcept { return rects_.empty(); }
    Rational area() const;
    CellRegion normalized() const;

    CellRegion translated(const Rational& dx, const Rational& dy) const;

    friend CellRegion unite(const CellRegion& a, const CellRegion& b);
    friend CellRegion intersect(const CellRegion& a, const CellRegion& b);
    friend CellRegion subtract(const CellRegion& a, const CellRegion& b);
    friend bool operator==(const CellRegion& a, const CellRegion& b);

private:
    std::vector<Rect> rects_;
};

/// l_n = n(n+1)/2
BigInt strip_offset(const BigInt& n);
/// n >= 0 with l_n <= m < l_(n+1), for m >= 0.
BigInt strip_band(const BigInt& m);

enum class StripLayer { Outside, Top, Middle };
std::string to_string(StripLayer layer);

/// Which piece of the weight's definition a point falls in.
struct StripCell {
    BigInt band;          // n >= 0, after mirroring x to |x|
    StripLayer layer;
    BigInt column;        // k = floor(|x|) - l_n, 0 <= k <= n
    bool mirrored;        // x < 0

    DyadicValue value() const;
};

/// Columns are [m, m+1) for x >= 0 and (-m-1, -m] for x < 0.
StripCell classify_r2(const Rational& x, const Rational& y);

/// 2^-n off the strip, 2^n on the top layer [1 - 2^-n, 1), 2^(n-2k) in
/// column k of the middle layer (1 - 2^(1-n), 1 - 2^-n).
DyadicValue eval_r2(const Rational& x, const Rational& y);

/// Splits the region into pieces on which the weight is constant.
struct WeightedPiece {
    Rect rect;
    DyadicValue value;
};
std::vector<WeightedPiece> weighted_pieces(const CellRegion& region);

/// Essential sup of w over the region (max over pieces of positive area).
std::optional<DyadicValue> esssup_r2(const CellRegion& region);
/// Integral of w^p over the region.
Rational integral_r2(const CellRegion& region, unsigned p);

struct StripRatioEstimate {
    DyadicValue max_ratio;
    PlanePoint attained_at;    // a point x with w(x + t, y) / w(x, y) = max_ratio
    DyadicValue analytic;      // 4
    std::string region;
};

/// sup w(x + t, y) / w(x, y) over columns of bands n <= grid_extent, exact.
StripRatioEstimate horizontal_ratio_bound(const Rational& t, unsigned grid_extent);

struct Criterion4Witness {
    unsigned n = 0;
    Rational delta;
    unsigned t = 0;
    PlanePoint s;             // (2 l_t, 0)
    CellRegion f;             // [-n, n]^2
    CellRegion e;             // F minus [-n, n] x (1 - 2^(2-t), 1)
    Rational removed_area;    // |F \ E|
    DyadicValue sup_weight;   // ess sup over (s + E) u (-s + E)
    bool area_ok = false;     // removed_area == n 2^(3-t) and < delta
    bool sup_ok = false;      // sup_weight <= 2^-t < delta

    bool ok() const noexcept { return area_ok && sup_ok; }
};

Criterion4Witness criterion4_witness(unsigned n, const Rational& delta);

}  // namespace wlp
