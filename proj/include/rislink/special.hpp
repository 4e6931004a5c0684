#pragma once

namespace rislink {

// Gamma function on [0.5, 1e4].  Values past the double overflow point
// (x > ~171.6) come back as +inf.  Throws InvalidArgument outside the domain.
double gamma_fn(double x);

// Gamma(x + 1/2) / Gamma(x), evaluated in log space so it stays finite for
// large x where the two factors individually overflow.
double gamma_half_ratio(double x);

// Scaled complementary error function exp(x^2) * erfc(x).  Finite and
// well-conditioned for large positive x where erfc underflows; overflows to
// +inf for x below about -26.6, which is the mathematically correct limit.
double erfcx(double x);

}  // namespace rislink
