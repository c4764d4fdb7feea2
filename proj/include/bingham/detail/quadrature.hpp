#ifndef BINGHAM_DETAIL_QUADRATURE_HPP_
#define BINGHAM_DETAIL_QUADRATURE_HPP_

namespace bingham::detail {

// Composite Simpson on [a, b] with n subintervals (forced even).
template <typename F>
double simpson(F f, double a, double b, int n) {
  if (n % 2) ++n;
  const double h = (b - a) / n;
  double sum = f(a) + f(b);
  for (int i = 1; i < n; ++i) sum += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

} // namespace bingham::detail

#endif
