#pragma once

#include <functional>
#include <vector>

namespace hoheat {

struct QuadResult {
    double value = 0.0;
    double abs_err = 0.0;
    int nodes = 0;
};

/// One non-adaptive 15-point Gauss-Kronrod panel on [a, b] with a
/// quadpack-style error estimate.
QuadResult gk15_panel(const std::function<double(double)>& f, double a, double b);

/// Adaptive Gauss-Kronrod on [a, b]: bisects the worst panel until the summed
/// error estimate drops below abs_tol or the panel budget runs out.  Never
/// throws for slow convergence; the caller inspects abs_err.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol, int max_panels = 4000);

struct AccelResult {
    double value = 0.0;
    double abs_err = 0.0;
};

/// Sum of a series whose terms alternate in sign with a smoothly varying
/// envelope, accelerated by iterated averaging of partial sums.
AccelResult accelerate_alternating(const std::vector<double>& terms);

/// Compensated (Kahan) accumulator.
class KahanSum {
  public:
    void add(double x) {
        double y = x - c_;
        double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }

  private:
    double s_ = 0.0;
    double c_ = 0.0;
};

}  // namespace hoheat
