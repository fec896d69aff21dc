#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mhw/composition.hpp"
#include "mhw/core_arith.hpp"
#include "mhw/solver.hpp"
#include "mhw/stats.hpp"

namespace py = pybind11;

namespace {

py::int_ to_py_int(const mhw::BigNat& value) {
  return py::cast<py::int_>(py::module_::import("builtins").attr("int")(value.to_decimal()));
}

}  // namespace

PYBIND11_MODULE(mhw, m) {
  m.doc() = "minimal Hamming weight of multiples: M(n), witnesses and reductions";

  m.def("hamming_weight", &mhw::hamming_weight, py::arg("n"));
  m.def(
      "odd_part",
      [](uint64_t n) {
        auto r = mhw::odd_part(n);
        return py::make_tuple(r.odd, r.shift);
      },
      py::arg("n"), "n as (odd, v) with n = odd * 2**v");
  m.def(
      "mersenne_exponent",
      [](uint64_t n) -> std::optional<int> { return mhw::mersenne_exponent(n); }, py::arg("n"));
  m.def(
      "mul_order2", [](uint64_t n) { return mhw::mul_order2(n).order; }, py::arg("n"),
      "multiplicative order of 2 modulo odd n");
  m.def(
      "factorize",
      [](uint64_t n) {
        py::list out;
        for (const auto& [p, e] : mhw::factorize(n).factors) out.append(py::make_tuple(p, e));
        return out;
      },
      py::arg("n"));
  m.def("euler_phi", &mhw::euler_phi, py::arg("n"));
  m.def("mobius", &mhw::mobius, py::arg("n"));
  m.def("omega", &mhw::omega, py::arg("n"));
  m.def("dedekind_psi", &mhw::dedekind_psi, py::arg("n"));
  m.def("v_p", &mhw::v_p, py::arg("m"), py::arg("p"));
  m.def("wieferich_exponent", &mhw::wieferich_exponent, py::arg("p"));
  m.def("primes_up_to", &mhw::primes_up_to, py::arg("limit"));
  m.def("is_prime", &mhw::is_prime, py::arg("n"));

  m.def(
      "min_weight", [](uint64_t n) { return mhw::min_weight(n); }, py::arg("n"),
      "minimal Hamming weight over all multiples of n");
  m.def(
      "min_weight_with_witness",
      [](uint64_t n) {
        mhw::Witness w = mhw::min_weight_with_witness(n);
        py::dict out;
        out["n"] = w.n;
        out["exponents"] = w.exponents;
        out["k"] = to_py_int(w.multiplier);
        return out;
      },
      py::arg("n"), "a minimal-weight multiple: sum(2**e) == k * n");
  m.def(
      "fast_min_weight",
      [](uint64_t n) {
        mhw::FastResult r = mhw::fast_min_weight(n);
        return py::make_tuple(r.m, r.trace.to_lines());
      },
      py::arg("n"), "(M(n), reduction trace lines)");
  m.def(
      "prime_power_reduce", &mhw::prime_power_reduce, py::arg("p"), py::arg("k"),
      "smallest k' with M(p**k) == M(p**k')");
  m.def(
      "coprime_order_exact",
      [](uint64_t a, uint64_t b) { return mhw::coprime_order_exact(a, b); }, py::arg("a"),
      py::arg("b"));
  m.def(
      "is_sturdy", [](uint64_t n) { return mhw::is_sturdy(n); }, py::arg("n"),
      "M(n) == hamming_weight(n)");
}
