// Python bindings for the main operations of the library.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cftlab/circuits.hpp"
#include "cftlab/erroranalysis.hpp"
#include "cftlab/gaussian.hpp"
#include "cftlab/lattice.hpp"
#include "cftlab/oar.hpp"
#include "cftlab/virasoro.hpp"

namespace py = pybind11;
using namespace cftlab;

PYBIND11_MODULE(_cftlab, m) {
  m.doc() = "lattice fermion laboratory: spectra, Virasoro blocks, "
            "renormalization maps, error curves, circuits";

  py::register_exception<LatticeError>(m, "LatticeError");

  py::enum_<Sector>(m, "Sector")
      .value("NeveuSchwarz", Sector::NeveuSchwarz)
      .value("Ramond", Sector::Ramond);
  py::enum_<Chirality>(m, "Chirality")
      .value("Left", Chirality::Left)
      .value("Right", Chirality::Right);
  py::enum_<CSector>(m, "CSector")
      .value("Zero", CSector::Zero)
      .value("Half", CSector::Half)
      .value("One", CSector::One);
  py::enum_<CoarseGrainScheme>(m, "CoarseGrainScheme")
      .value("Momentum", CoarseGrainScheme::Momentum)
      .value("Wavelet", CoarseGrainScheme::Wavelet);
  py::enum_<MomentumErrorComponent>(m, "MomentumErrorComponent")
      .value("DiagonalL2", MomentumErrorComponent::DiagonalL2)
      .value("OffdiagonalHS", MomentumErrorComponent::OffdiagonalHS);

  // ---- lattice -------------------------------------------------------------
  py::class_<LatticeSpec>(m, "LatticeSpec")
      .def_readonly("N", &LatticeSpec::N)
      .def_readonly("cells", &LatticeSpec::cells)
      .def_readonly("L", &LatticeSpec::L)
      .def_readonly("lam", &LatticeSpec::lambda)
      .def_readonly("sector", &LatticeSpec::sector)
      .def_readonly("n", &LatticeSpec::n)
      .def_readonly("m", &LatticeSpec::m)
      .def_readonly("eps", &LatticeSpec::eps)
      .def_readonly("pos", &LatticeSpec::pos)
      .def_readonly("xs", &LatticeSpec::xs);
  m.def("build_spec", &buildSpec, py::arg("N"), py::arg("L") = 1.0,
        py::arg("lam") = 0.0, py::arg("sector") = Sector::NeveuSchwarz,
        py::arg("maxN") = 12);
  m.def("build_cell_spec", &buildCellSpec, py::arg("cells"),
        py::arg("L") = 1.0, py::arg("lam") = 0.0,
        py::arg("sector") = Sector::NeveuSchwarz);
  m.def("reduced_momenta", &reducedMomenta);
  m.def("full_momenta", &fullMomenta);

  py::class_<QuadraticOperator>(m, "QuadraticOperator")
      .def(py::init<int>(), py::arg("m"))
      .def(py::init<MatC, MatC, MatC, cplx>(), py::arg("P"), py::arg("Q"),
           py::arg("R"), py::arg("off"))
      .def("modes", &QuadraticOperator::modes)
      .def("hopping_block", &QuadraticOperator::hoppingBlock)
      .def("pairing_block", &QuadraticOperator::pairingBlock)
      .def("annihilation_block", &QuadraticOperator::annihilationBlock)
      .def("offset", [](const QuadraticOperator& o) { return o.offset(); })
      .def("add_nm", &QuadraticOperator::addNM)
      .def("add_cc", &QuadraticOperator::addCC)
      .def("add_aa", &QuadraticOperator::addAA)
      .def("K", &QuadraticOperator::K)
      .def_static("from_K", &QuadraticOperator::fromK)
      .def("scalar", &QuadraticOperator::scalar)
      .def("dagger", &QuadraticOperator::dagger)
      .def("comm", &QuadraticOperator::comm)
      .def("scaled", &QuadraticOperator::scaled)
      .def("__add__", &QuadraticOperator::operator+)
      .def("is_hermitian", &QuadraticOperator::isHermitian,
           py::arg("tol") = 1e-10);

  py::class_<SpectralData>(m, "SpectralData")
      .def_readonly("momenta", &SpectralData::momenta)
      .def_readonly("omega", &SpectralData::omega)
      .def_readonly("theta", &SpectralData::theta)
      .def_readonly("diagonal_offset", &SpectralData::diagonalOffset)
      .def_readonly("zero_mode", &SpectralData::zeroMode);
  py::class_<GaussianState>(m, "GaussianState")
      .def_readwrite("M", &GaussianState::M)
      .def_readwrite("parity", &GaussianState::parity)
      .def("modes", &GaussianState::modes)
      .def("purity_defect", &GaussianState::purityDefect);

  m.def("build_staggered_hamiltonian", &buildStaggeredHamiltonian);
  m.def("diagonalize", &diagonalize);
  m.def("ground_state", &groundState);

  // ---- gaussian --------------------------------------------------------------
  m.def("evolve", &evolve, py::arg("op"), py::arg("generator"), py::arg("t"));
  m.def("expectation",
        py::overload_cast<const GaussianState&, const QuadraticOperator&>(
            &expectation));
  m.def("expectation_monomial",
        [](const GaussianState& st, const std::vector<std::pair<int, bool>>&
                                        factors) {
          std::vector<FermionFactor> mono;
          for (auto& [mode, dag] : factors) mono.push_back({mode, dag});
          return expectation(st, mono);
        });
  m.def("expectation_product", &expectationProduct);
  m.def("vacuum_commutator", &vacuumCommutator);
  m.def("conformal_correlator", &conformalCorrelator, py::arg("ground"),
        py::arg("A"), py::arg("B"), py::arg("generator"), py::arg("t"));
  m.def("staggered_field_correlator", &staggeredFieldCorrelator);
  m.def("continuum_field_correlator", &continuumFieldCorrelator);

  // ---- virasoro ---------------------------------------------------------------
  py::class_<KooSaleurGenerator>(m, "KooSaleurGenerator")
      .def_readonly("N", &KooSaleurGenerator::N)
      .def_readonly("k", &KooSaleurGenerator::k)
      .def_readonly("chirality", &KooSaleurGenerator::chirality)
      .def_readonly("c", &KooSaleurGenerator::c)
      .def_readonly("payload", &KooSaleurGenerator::payload);
  m.def("hamiltonian_density_modes", &hamiltonianDensityModes, py::arg("sp"),
        py::arg("k"), py::arg("chir") = Chirality::Left);
  m.def("koo_saleur", &kooSaleur, py::arg("sp"), py::arg("k"),
        py::arg("c") = 0.0, py::arg("chir") = Chirality::Left);
  m.def("hermitian_combination", &hermitianCombination, py::arg("sp"),
        py::arg("k"), py::arg("c") = 0.0, py::arg("phi") = 0.0,
        py::arg("chir") = Chirality::Left);
  m.def("koo_saleur_momentum_block", &kooSaleurMomentumBlock);
  m.def("continuum_matching_constant", &continuumMatchingConstant);
  m.def("central_charge_estimate", &centralChargeEstimate, py::arg("sp"),
        py::arg("kint"), py::arg("sector"));

  // ---- renormalization maps ----------------------------------------------------
  m.def("daubechies_filter", &daubechiesFilter, py::arg("taps"));
  py::class_<CascadeResult>(m, "CascadeResult")
      .def_readonly("x", &CascadeResult::x)
      .def_readonly("phi", &CascadeResult::phi)
      .def_readonly("iterations", &CascadeResult::iterations)
      .def_readonly("residual", &CascadeResult::residual);
  m.def("cascade", &cascade, py::arg("c"), py::arg("resolution") = 10,
        py::arg("tol") = 1e-8, py::arg("max_iter") = 200);
  m.def("wavelet_isometry", &waveletIsometry);
  m.def("wavelet_scaling_map", &waveletScalingMap);
  m.def("momentum_scaling_map", &momentumScalingMap);
  m.def("coarse_grain_state", &coarseGrainState, py::arg("spN"),
        py::arg("fine"), py::arg("M"), py::arg("scheme"),
        py::arg("filter") = VecR());

  // ---- error analysis ------------------------------------------------------------
  py::class_<SobolevResult>(m, "SobolevResult")
      .def_readonly("value", &SobolevResult::value)
      .def_readonly("divergent", &SobolevResult::divergent)
      .def_readonly("tail_exponent", &SobolevResult::tailExponent);
  m.def("sobolev_norm", &sobolevNorm, py::arg("c"), py::arg("delta"));
  m.def("sobolev_exponent_cap", &sobolevExponentCap);
  py::class_<ErrorCurve>(m, "ErrorCurve")
      .def_readonly("scales", &ErrorCurve::scales)
      .def_readonly("sizes", &ErrorCurve::sizes)
      .def_readonly("values", &ErrorCurve::values)
      .def_readonly("monotone_decreasing", &ErrorCurve::monotoneDecreasing);
  m.def("momentum_error_curve", &momentumErrorCurve, py::arg("kint"),
        py::arg("Nmin"), py::arg("Nmax"), py::arg("M"), py::arg("component"));
  m.def("wavelet_error_curve", &waveletErrorCurve, py::arg("taps"),
        py::arg("delta"), py::arg("M"), py::arg("Nmin"), py::arg("Nmax"),
        py::arg("gamma") = 1.0);
  py::class_<DecayFit>(m, "DecayFit")
      .def_readonly("slope", &DecayFit::slope)
      .def_readonly("intercept", &DecayFit::intercept)
      .def_readonly("residual", &DecayFit::residual);
  m.def("fit_decay", &fitDecay);

  // ---- circuits ---------------------------------------------------------------
  py::class_<PauliTerm>(m, "PauliTerm")
      .def_readonly("letters", &PauliTerm::letters)
      .def_readonly("coeff", &PauliTerm::coeff);
  m.def("jordan_wigner", &jordanWigner);
  py::class_<Circuit>(m, "Circuit")
      .def_readonly("qubits", &Circuit::qubits)
      .def_readonly("ancillas", &Circuit::ancillas)
      .def("__len__", [](const Circuit& c) { return c.gates.size(); });
  m.def("export_circuit", &exportCircuit);
  m.def("statevector_simulate", &statevectorSimulate);
  m.def("fock_vacuum_state", &fockVacuumState);
  m.def("ground_state_prep_circuit", &groundStatePrepCircuit);
  m.def("field_operator_gadget", &fieldOperatorGadget, py::arg("sp"),
        py::arg("slot"), py::arg("dagger"));
  m.def("trotterize", &trotterize, py::arg("gen"), py::arg("t"),
        py::arg("steps"), py::arg("order"));
  py::class_<PhaseEstimationPlan>(m, "PhaseEstimationPlan")
      .def_readonly("circuit", &PhaseEstimationPlan::circuit)
      .def_readonly("r", &PhaseEstimationPlan::r)
      .def_readonly("offset", &PhaseEstimationPlan::offset)
      .def_readonly("scale", &PhaseEstimationPlan::scale)
      .def_readonly("terms", &PhaseEstimationPlan::terms);
  m.def("phase_estimation_plan", &phaseEstimationPlan, py::arg("observable"),
        py::arg("r"));
  py::class_<PhaseEstimationReadout>(m, "PhaseEstimationReadout")
      .def_readonly("probabilities", &PhaseEstimationReadout::probabilities)
      .def_readonly("energies", &PhaseEstimationReadout::energies)
      .def_readonly("mean", &PhaseEstimationReadout::mean);
  m.def("simulate_readout", &simulateReadout, py::arg("plan"),
        py::arg("input"));
}
