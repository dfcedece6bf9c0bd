// SPDX-License-Identifier: Apache-2.0

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gaussfactor/cli.hpp"
#include "gaussfactor/gauss.hpp"
#include "gaussfactor/numtheory.hpp"
#include "gaussfactor/rotor.hpp"
#include "gaussfactor/wavepacket.hpp"

namespace py = pybind11;

namespace gf = gaussfactor;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Factor detection from quadratic-phase autocorrelation signals";
#ifdef GAUSSFACTOR_VERSION
  m.attr("__version__") = GAUSSFACTOR_VERSION;
#else
  m.attr("__version__") = "dev";
#endif

  // --- numtheory ---------------------------------------------------------
  auto nt = m.def_submodule("numtheory", "exact integer arithmetic foundations");

  py::enum_<gf::numtheory::OddClass>(nt, "OddClass")
      .value("M1", gf::numtheory::OddClass::M1)
      .value("M3", gf::numtheory::OddClass::M3);

  py::class_<gf::numtheory::ResidueClass>(nt, "ResidueClass")
      .def_readonly("variant", &gf::numtheory::ResidueClass::variant)
      .def_readonly("witness_s", &gf::numtheory::ResidueClass::witness_s)
      .def("__repr__", [](const gf::numtheory::ResidueClass& r) {
        return std::string("ResidueClass(") +
               (r.variant == gf::numtheory::OddClass::M1 ? "M1" : "M3") +
               ", s=" + std::to_string(r.witness_s) + ")";
      });

  py::class_<gf::numtheory::Factorization>(nt, "Factorization")
      .def_readonly("factors", &gf::numtheory::Factorization::factors)
      .def("value", &gf::numtheory::Factorization::value);

  nt.def("gcd", &gf::numtheory::gcd, py::arg("a"), py::arg("b"));
  nt.def("jacobi", &gf::numtheory::jacobi, py::arg("a"), py::arg("b"),
         "Jacobi symbol (a/b) for odd positive b");
  nt.def("residue_class", &gf::numtheory::residue_class, py::arg("r"));
  nt.def("strip_twos", &gf::numtheory::strip_twos, py::arg("n"),
         "split n = 2^k * odd_part, returns (k, odd_part)");
  nt.def("brute_factor", &gf::numtheory::brute_factor, py::arg("n"),
         "trial-division factorization oracle");

  // --- gauss --------------------------------------------------------------
  auto gs = m.def_submodule("gauss", "quadratic Gauss sums G(a,b)");

  py::enum_<gf::gauss::UnitRoot>(gs, "UnitRoot")
      .value("PlusOne", gf::gauss::UnitRoot::PlusOne)
      .value("PlusI", gf::gauss::UnitRoot::PlusI)
      .value("MinusOne", gf::gauss::UnitRoot::MinusOne)
      .value("MinusI", gf::gauss::UnitRoot::MinusI);

  py::enum_<gf::gauss::Classification>(gs, "Classification")
      .value("PurelyReal", gf::gauss::Classification::PurelyReal)
      .value("PurelyImaginary", gf::gauss::Classification::PurelyImaginary)
      .value("Unity", gf::gauss::Classification::Unity)
      .value("Mixed", gf::gauss::Classification::Mixed);

  py::class_<gf::gauss::GaussValue>(gs, "GaussValue")
      .def_readonly("coefficient", &gf::gauss::GaussValue::coefficient)
      .def_readonly("denominator_b", &gf::gauss::GaussValue::denominator_b)
      .def_readonly("degenerate_unity", &gf::gauss::GaussValue::degenerate_unity)
      .def("to_complex", &gf::gauss::GaussValue::to_complex)
      .def("mod2", &gf::gauss::GaussValue::mod2)
      .def("__repr__", [](const gf::gauss::GaussValue& v) {
        if (v.degenerate_unity) return std::string("GaussValue(1)");
        return std::string("GaussValue(") + gf::gauss::to_string(v.coefficient) +
               "/sqrt(" + std::to_string(v.denominator_b) + "))";
      });

  gs.def("gauss_direct", &gf::gauss::gauss_direct, py::arg("a"), py::arg("b"),
         "direct summation of G(a,b)");
  gs.def("reduce", &gf::gauss::reduce, py::arg("a"), py::arg("b"),
         "cancel the common factor; G(a,b) == G(*reduce(a,b))");
  gs.def("gauss_closed", &gf::gauss::gauss_closed, py::arg("a"), py::arg("b"),
         "Jacobi-symbol closed form, odd b only");
  gs.def("classify", &gf::gauss::classify, py::arg("value"));

  // --- rotor ---------------------------------------------------------------
  auto rt = m.def_submodule("rotor", "quantum-rotor autocorrelation and scans");

  py::enum_<gf::rotor::SignalPart>(rt, "SignalPart")
      .value("Modulus", gf::rotor::SignalPart::Modulus)
      .value("RealPart", gf::rotor::SignalPart::RealPart)
      .value("ImaginaryPart", gf::rotor::SignalPart::ImaginaryPart);

  py::class_<gf::rotor::ScanRow>(rt, "ScanRow")
      .def_readonly("n", &gf::rotor::ScanRow::n)
      .def_readonly("re", &gf::rotor::ScanRow::re)
      .def_readonly("im", &gf::rotor::ScanRow::im)
      .def_readonly("mod2", &gf::rotor::ScanRow::mod2)
      .def_readonly("d", &gf::rotor::ScanRow::d)
      .def_readonly("classification", &gf::rotor::ScanRow::classification);

  py::class_<gf::rotor::FactorEvidence>(rt, "FactorEvidence")
      .def_readonly("n", &gf::rotor::FactorEvidence::n)
      .def_readonly("d", &gf::rotor::FactorEvidence::d)
      .def_readonly("signal_part", &gf::rotor::FactorEvidence::signal_part);

  py::class_<gf::rotor::FactorReport>(rt, "FactorReport")
      .def_readonly("input_n", &gf::rotor::FactorReport::input_n)
      .def_readonly("two_exponent", &gf::rotor::FactorReport::two_exponent)
      .def_readonly("odd_factors", &gf::rotor::FactorReport::odd_factors)
      .def_readonly("evidence", &gf::rotor::FactorReport::evidence)
      .def("value", &gf::rotor::FactorReport::value);

  rt.def("autocorrelation", &gf::rotor::autocorrelation, py::arg("number"),
         py::arg("n"), "S(n) = G(n mod N, N) at integer scaled time");
  rt.def("autocorrelation_continuous", &gf::rotor::autocorrelation_continuous,
         py::arg("number"), py::arg("t_over_t_rev"));
  rt.def("scan", &gf::rotor::scan, py::arg("number"),
         "scan rows for n = 1..number");
  rt.def("extract_factors", &gf::rotor::extract_factors, py::arg("number"),
         "signal-driven factorization with per-divisor evidence");

  // --- wavepacket ------------------------------------------------------------
  auto wp = m.def_submodule("wavepacket",
                            "dispersive wave-packet autocorrelation and the "
                            "symmetric-maximum factor detector");

  py::class_<gf::wavepacket::WavePacketSpec>(wp, "WavePacketSpec")
      .def(py::init<std::uint64_t, double, std::uint32_t>(), py::arg("number"),
           py::arg("delta_m"), py::arg("m_max"))
      .def_static("make", &gf::wavepacket::WavePacketSpec::make,
                  py::arg("number"),
                  py::arg("delta_m") = gf::wavepacket::kDefaultDeltaM)
      .def_readonly("number", &gf::wavepacket::WavePacketSpec::number)
      .def_readonly("delta_m", &gf::wavepacket::WavePacketSpec::delta_m)
      .def_readonly("m_max", &gf::wavepacket::WavePacketSpec::m_max);

  py::class_<gf::wavepacket::RiddleTrace>(wp, "RiddleTrace")
      .def_readonly("center_ell", &gf::wavepacket::RiddleTrace::center_ell)
      .def_readonly("offsets", &gf::wavepacket::RiddleTrace::offsets)
      .def_readonly("values", &gf::wavepacket::RiddleTrace::values);

  py::class_<gf::wavepacket::CandidateVerdict>(wp, "CandidateVerdict")
      .def_readonly("ell", &gf::wavepacket::CandidateVerdict::ell)
      .def_readonly("flagged", &gf::wavepacket::CandidateVerdict::flagged)
      .def_readonly("peak_score", &gf::wavepacket::CandidateVerdict::peak_score)
      .def_readonly("asymmetry", &gf::wavepacket::CandidateVerdict::asymmetry);

  wp.attr("DEFAULT_DELTA_M") = gf::wavepacket::kDefaultDeltaM;
  wp.attr("DEFAULT_HALF_WINDOW") = gf::wavepacket::kDefaultHalfWindow;
  wp.attr("DEFAULT_SAMPLES") = gf::wavepacket::kDefaultSamples;
  wp.attr("DEFAULT_SYM_TOL") = gf::wavepacket::kDefaultSymTol;

  wp.def("weights", &gf::wavepacket::weights, py::arg("spec"),
         "normalized Gaussian weights as (m, W_m) pairs");
  wp.def("autocorrelation", &gf::wavepacket::autocorrelation, py::arg("spec"),
         py::arg("tau"));
  wp.def("riddle_trace", &gf::wavepacket::riddle_trace, py::arg("spec"),
         py::arg("ell"), py::arg("half_window") = gf::wavepacket::kDefaultHalfWindow,
         py::arg("samples") = gf::wavepacket::kDefaultSamples);
  wp.def("detect_factor_candidates", &gf::wavepacket::detect_factor_candidates,
         py::arg("spec"), py::arg("candidates"),
         py::arg("half_window") = gf::wavepacket::kDefaultHalfWindow,
         py::arg("samples") = gf::wavepacket::kDefaultSamples,
         py::arg("sym_tol") = gf::wavepacket::kDefaultSymTol);
}
