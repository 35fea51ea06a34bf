#pragma once

// Extended-real energies: finite doubles plus a symbolic +infinity used for
// forbidden pairs. +infinity absorbs in sums and compares above every finite
// value. Comparisons are exact; tolerances are applied by callers.

namespace kcr {

class ExtReal {
public:
    constexpr ExtReal() = default;
    constexpr ExtReal(double v) : value_(v) {}  // NOLINT: implicit on purpose

    static constexpr ExtReal infinity() {
        ExtReal e;
        e.infinite_ = true;
        return e;
    }

    constexpr bool is_finite() const { return !infinite_; }
    constexpr bool is_infinite() const { return infinite_; }

    // Only meaningful for finite values; infinite values report 0 so callers
    // must branch on is_finite() first.
    constexpr double value() const { return value_; }

    constexpr ExtReal& operator+=(ExtReal o) {
        if (infinite_ || o.infinite_) {
            infinite_ = true;
            value_ = 0.0;
        } else {
            value_ += o.value_;
        }
        return *this;
    }

    friend constexpr ExtReal operator+(ExtReal a, ExtReal b) {
        a += b;
        return a;
    }

    friend constexpr bool operator==(ExtReal a, ExtReal b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
        return a.value_ == b.value_;
    }
    friend constexpr bool operator!=(ExtReal a, ExtReal b) { return !(a == b); }

    friend constexpr bool operator<(ExtReal a, ExtReal b) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.value_ < b.value_;
    }
    friend constexpr bool operator>(ExtReal a, ExtReal b) { return b < a; }
    friend constexpr bool operator<=(ExtReal a, ExtReal b) { return !(b < a); }
    friend constexpr bool operator>=(ExtReal a, ExtReal b) { return !(a < b); }

private:
    double value_ = 0.0;
    bool infinite_ = false;
};

}  // namespace kcr
