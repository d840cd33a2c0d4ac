#include "hoheat/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace hoheat {
namespace {

// 15-point Kronrod abscissae/weights on [-1, 1] and the embedded 7-point
// Gauss weights (even-indexed Kronrod nodes).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
    double a, b;
    double value;
    double err;
};

struct PanelLess {
    bool operator()(const Panel& p, const Panel& q) const { return p.err < q.err; }
};

Panel gk15_raw(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    double fc = f(center);
    double resg = fc * kWg[3];
    double resk = fc * kWgk[7];
    double resabs = std::fabs(resk);

    double fv1[7], fv2[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        fv1[j] = f(center - dx);
        fv2[j] = f(center + dx);
        const double fsum = fv1[j] + fv2[j];
        if (j % 2 == 1) resg += kWg[j / 2] * fsum;
        resk += kWgk[j] * fsum;
        resabs += kWgk[j] * (std::fabs(fv1[j]) + std::fabs(fv2[j]));
    }

    const double reskh = resk * 0.5;
    double resasc = kWgk[7] * std::fabs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::fabs(fv1[j] - reskh) + std::fabs(fv2[j] - reskh));

    const double value = resk * half;
    resabs *= std::fabs(half);
    resasc *= std::fabs(half);

    double err = std::fabs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double uflow = 50.0 * 2.2250738585072014e-308;
    const double eps_bound = 100.0 * 2.220446049250313e-16 * resabs;
    if (eps_bound > uflow) err = std::max(err, eps_bound);

    return Panel{a, b, value, err};
}

}  // namespace

QuadResult gk15_panel(const std::function<double(double)>& f, double a, double b) {
    Panel p = gk15_raw(f, a, b);
    return QuadResult{p.value, p.err, 15};
}

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol, int max_panels) {
    QuadResult out;
    if (a == b) return out;

    std::priority_queue<Panel, std::vector<Panel>, PanelLess> heap;
    Panel first = gk15_raw(f, a, b);
    heap.push(first);
    double total = first.value;
    double err = first.err;
    int nodes = 15;
    int panels = 1;

    while (err > abs_tol && panels < max_panels) {
        Panel worst = heap.top();
        if (worst.err <= 0.0) break;
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {  // interval exhausted
            heap.push(worst);
            break;
        }
        Panel left = gk15_raw(f, worst.a, mid);
        Panel right = gk15_raw(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        err += left.err + right.err - worst.err;
        nodes += 30;
        ++panels;
        heap.push(left);
        heap.push(right);
    }

    out.value = total;
    out.abs_err = std::max(err, 0.0);
    out.nodes = nodes;
    return out;
}

AccelResult accelerate_alternating(const std::vector<double>& terms) {
    AccelResult out;
    const std::size_t n = terms.size();
    if (n == 0) return out;

    // Partial sums, then repeated pairwise averaging; the deepest diagonal
    // entry is the estimate and the last averaging step its error.
    std::vector<double> row(n);
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        s += terms[i];
        row[i] = s;
    }
    double last = row[0];
    double second_last = row[0];
    std::size_t len = n;
    while (len > 1) {
        for (std::size_t i = 0; i + 1 < len; ++i) row[i] = 0.5 * (row[i] + row[i + 1]);
        --len;
        second_last = last;
        last = row[0];
    }
    out.value = last;
    out.abs_err = (n > 1) ? std::fabs(last - second_last) : std::fabs(terms[0]);
    return out;
}

}  // namespace hoheat
