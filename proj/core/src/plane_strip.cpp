#include "wlp/plane_strip.hpp"

#include "wlp/errors.hpp"

#include <algorithm>
#include <functional>

namespace wlp {

namespace {

Rational mid(const Rational& a, const Rational& b) { return (a + b) / 2; }

std::vector<Rational> sorted_unique(std::vector<Rational> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool covers(const std::vector<Rect>& rects, const Rational& x, const Rational& y) {
    for (const auto& r : rects) {
        if (r.x0 < x && x < r.x1 && r.y0 < y && y < r.y1) return true;
    }
    return false;
}

// Canonical form of {elementary cells where keep(cell) holds} over the
// compressed grid: maximal y-runs per x-strip, then maximal x-runs of strips
// with identical y-runs.
CellRegion combine(const std::vector<Rect>& a, const std::vector<Rect>& b,
                   const std::function<bool(bool, bool)>& keep) {
    std::vector<Rational> xs, ys;
    for (const auto* list : {&a, &b}) {
        for (const auto& r : *list) {
            xs.push_back(r.x0);
            xs.push_back(r.x1);
            ys.push_back(r.y0);
            ys.push_back(r.y1);
        }
    }
    xs = sorted_unique(std::move(xs));
    ys = sorted_unique(std::move(ys));

    using Runs = std::vector<std::pair<Rational, Rational>>;
    std::vector<Runs> strips;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        Runs runs;
        const Rational mx = mid(xs[i], xs[i + 1]);
        for (std::size_t j = 0; j + 1 < ys.size(); ++j) {
            const Rational my = mid(ys[j], ys[j + 1]);
            if (!keep(covers(a, mx, my), covers(b, mx, my))) continue;
            if (!runs.empty() && runs.back().second == ys[j]) {
                runs.back().second = ys[j + 1];
            } else {
                runs.emplace_back(ys[j], ys[j + 1]);
            }
        }
        strips.push_back(std::move(runs));
    }

    std::vector<Rect> out;
    std::size_t i = 0;
    while (i < strips.size()) {
        std::size_t j = i + 1;
        while (j < strips.size() && strips[j] == strips[i]) ++j;
        for (const auto& [y0, y1] : strips[i]) out.push_back(Rect{xs[i], y0, xs[j], y1});
        i = j;
    }
    return CellRegion(std::move(out));
}

void check_rect(const Rect& r) {
    if (!(r.x0 < r.x1) || !(r.y0 < r.y1)) throw ValidationError("rectangle corners must satisfy x0 < x1 and y0 < y1");
}

}  // namespace

// ---------------------------------------------------------------- regions

CellRegion::CellRegion(std::vector<Rect> rects) : rects_(std::move(rects)) {
    for (const auto& r : rects_) check_rect(r);
}

CellRegion CellRegion::box(const Rational& x0, const Rational& y0, const Rational& x1, const Rational& y1) {
    return CellRegion({Rect{x0, y0, x1, y1}});
}

CellRegion CellRegion::normalized() const {
    return combine(rects_, {}, [](bool in_a, bool) { return in_a; });
}

Rational CellRegion::area() const {
    Rational sum = 0;
    for (const auto& r : normalized().rects_) sum += r.area();
    return sum;
}

bool operator==(const CellRegion& a, const CellRegion& b) { return a.normalized().rects_ == b.normalized().rects_; }

CellRegion CellRegion::translated(const Rational& dx, const Rational& dy) const {
    std::vector<Rect> out;
    for (const auto& r : rects_) out.push_back(Rect{r.x0 + dx, r.y0 + dy, r.x1 + dx, r.y1 + dy});
    return CellRegion(std::move(out));
}

CellRegion unite(const CellRegion& a, const CellRegion& b) {
    return combine(a.rects_, b.rects_, [](bool x, bool y) { return x || y; });
}

CellRegion intersect(const CellRegion& a, const CellRegion& b) {
    return combine(a.rects_, b.rects_, [](bool x, bool y) { return x && y; });
}

CellRegion subtract(const CellRegion& a, const CellRegion& b) {
    return combine(a.rects_, b.rects_, [](bool x, bool y) { return x && !y; });
}

// ---------------------------------------------------------------- weight

BigInt strip_offset(const BigInt& n) { return n * (n + 1) / 2; }

BigInt strip_band(const BigInt& m) {
    if (m < 0) throw UsageError("strip_band expects a column index >= 0");
    BigInt n = (boost::multiprecision::sqrt(8 * m + 1) - 1) / 2;
    while (strip_offset(n) > m) --n;
    while (strip_offset(n + 1) <= m) ++n;
    return n;
}

std::string to_string(StripLayer layer) {
    switch (layer) {
        case StripLayer::Outside: return "outside";
        case StripLayer::Top: return "top";
        case StripLayer::Middle: return "middle";
    }
    return "?";
}

DyadicValue StripCell::value() const {
    switch (layer) {
        case StripLayer::Outside: return DyadicValue::pow2(-band);
        case StripLayer::Top: return DyadicValue::pow2(band);
        case StripLayer::Middle: return DyadicValue::pow2(band - 2 * column);
    }
    return {};
}

StripCell classify_r2(const Rational& x, const Rational& y) {
    const bool mirrored = x < 0;
    const Rational ax = mirrored ? Rational(-x) : x;
    // floor(|x|) for |x| >= 0
    const BigInt m = boost::multiprecision::numerator(ax) / boost::multiprecision::denominator(ax);
    const BigInt n = strip_band(m);
    const Rational top = 1 - pow2(-n);
    const Rational bottom = 1 - pow2(1 - n);
    StripCell cell{n, StripLayer::Outside, m - strip_offset(n), mirrored};
    if (top <= y && y < 1) {
        cell.layer = StripLayer::Top;
    } else if (bottom < y && y < top) {
        cell.layer = StripLayer::Middle;
    }
    return cell;
}

DyadicValue eval_r2(const Rational& x, const Rational& y) { return classify_r2(x, y).value(); }

std::vector<WeightedPiece> weighted_pieces(const CellRegion& region) {
    std::vector<WeightedPiece> out;
    for (const auto& r : region.rects()) {
        std::vector<Rational> xcuts{r.x0, r.x1};
        BigInt first = boost::multiprecision::numerator(r.x0) / boost::multiprecision::denominator(r.x0) - 1;
        for (BigInt c = first; Rational(c) < r.x1; ++c) {
            if (r.x0 < c) xcuts.push_back(Rational(c));
        }
        xcuts = sorted_unique(std::move(xcuts));
        for (std::size_t i = 0; i + 1 < xcuts.size(); ++i) {
            const Rational mx = mid(xcuts[i], xcuts[i + 1]);
            const BigInt n = classify_r2(mx, 0).band;
            std::vector<Rational> ycuts{r.y0, r.y1};
            for (const Rational& b : {Rational(1 - pow2(1 - n)), Rational(1 - pow2(-n)), Rational(1)}) {
                if (r.y0 < b && b < r.y1) ycuts.push_back(b);
            }
            ycuts = sorted_unique(std::move(ycuts));
            for (std::size_t j = 0; j + 1 < ycuts.size(); ++j) {
                Rect piece{xcuts[i], ycuts[j], xcuts[i + 1], ycuts[j + 1]};
                out.push_back(WeightedPiece{piece, eval_r2(mx, mid(ycuts[j], ycuts[j + 1]))});
            }
        }
    }
    return out;
}

std::optional<DyadicValue> esssup_r2(const CellRegion& region) {
    std::optional<DyadicValue> best;
    for (const auto& piece : weighted_pieces(region)) {
        if (!best || *best < piece.value) best = piece.value;
    }
    return best;
}

Rational integral_r2(const CellRegion& region, unsigned p) {
    Rational sum = 0;
    for (const auto& piece : weighted_pieces(region)) sum += piece.rect.area() * piece.value.pow(p).to_rational();
    return sum;
}

// ---------------------------------------------------------------- translations

StripRatioEstimate horizontal_ratio_bound(const Rational& t, unsigned grid_extent) {
    if (t < 0 || t >= 1) throw UsageError("horizontal_ratio_bound expects t in [0, 1)");
    StripRatioEstimate est{DyadicValue{}, PlanePoint{0, 0}, DyadicValue::pow2(2),
                           "columns of bands n <= " + std::to_string(grid_extent) + ", both half-planes"};
    if (t == 0) return est;

    const BigInt last_column = strip_offset(BigInt(grid_extent) + 1) - 1;
    auto consider = [&](const Rational& x, const Rational& y) {
        DyadicValue r = eval_r2(x + t, y) / eval_r2(x, y);
        if (est.max_ratio < r) {
            est.max_ratio = r;
            est.attained_at = PlanePoint{x, y};
        }
    };
    for (BigInt m = 0; m <= last_column; ++m) {
        std::vector<Rational> cuts;
        for (const BigInt& n : {strip_band(m), strip_band(m + 1)}) {
            cuts.push_back(1 - pow2(1 - n));
            cuts.push_back(1 - pow2(-n));
        }
        cuts.push_back(1);
        cuts = sorted_unique(std::move(cuts));
        // One y per open layer; the cut lines themselves are null sets.
        std::vector<Rational> ys{cuts.front() - 1, cuts.back() + 1};
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) ys.push_back(mid(cuts[i], cuts[i + 1]));
        // x in column m with x + t in column m + 1, and the mirror image
        // moving from column m + 1 into column m on the negative side.
        const Rational right = Rational(m + 1) - t / 2;
        const Rational left = -Rational(m + 1) - t / 2;
        for (const auto& y : ys) {
            consider(right, y);
            consider(left, y);
        }
    }
    return est;
}

Criterion4Witness criterion4_witness(unsigned n, const Rational& delta) {
    if (n < 1) throw UsageError("criterion4_witness expects n >= 1");
    if (delta <= 0) throw UsageError("criterion4_witness expects delta > 0");
    Criterion4Witness w;
    w.n = n;
    w.delta = delta;
    w.t = 2;
    while (!(pow2(-static_cast<std::int64_t>(w.t)) < delta && n * pow2(3 - static_cast<std::int64_t>(w.t)) < delta)) ++w.t;

    const Rational rn = n;
    const std::int64_t t = w.t;
    w.f = CellRegion::box(-rn, -rn, rn, rn);
    w.e = subtract(w.f, CellRegion::box(-rn, 1 - pow2(2 - t), rn, 1));
    w.removed_area = subtract(w.f, w.e).area();
    const Rational shift = Rational(2 * strip_offset(BigInt(t)));
    w.s = PlanePoint{shift, 0};

    auto plus = esssup_r2(w.e.translated(shift, 0));
    auto minus = esssup_r2(w.e.translated(-shift, 0));
    w.sup_weight = *plus < *minus ? *minus : *plus;

    const Rational cap = pow2(-t);
    w.area_ok = w.removed_area == rn * pow2(3 - t) && w.removed_area < delta;
    w.sup_ok = w.sup_weight.to_rational() <= cap && cap < delta;
    return w;
}

}  // namespace wlp
