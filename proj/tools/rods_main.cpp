// Command-line driver for the discrete elastic rod library: equal-chord
// discretization, energy reports, frame fields, convergence sweeps, and the
// uneven-spacing counterexample chain.
//
// Exit codes: 0 success, 2 invalid input, 3 numerical failure.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kirchhoff/curves.hpp"
#include "kirchhoff/discretize.hpp"
#include "kirchhoff/energy.hpp"
#include "kirchhoff/frames.hpp"
#include "kirchhoff/harness.hpp"
#include "kirchhoff/rod.hpp"
#include "kirchhoff/spline.hpp"

namespace {

struct CurveOptions {
  std::string kind = "line";
  double L = 1.0;
  double R = 1.0;
  double a = 1.0;
  double b = 1.0;
};

struct TwistOptions {
  std::string kind = "zero";
  double slope = 1.0;
};

void add_curve_options(CLI::App* cmd, CurveOptions* opts) {
  cmd->add_option("--curve", opts->kind, "Curve family: line, arc, or helix")
      ->check(CLI::IsMember({"line", "arc", "helix"}));
  cmd->add_option("--L", opts->L, "Curve length")->check(CLI::PositiveNumber);
  cmd->add_option("--R", opts->R, "Arc radius (arc only)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--a", opts->a, "Helix radius (helix only)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--b", opts->b, "Helix pitch parameter (helix only)")
      ->check(CLI::NonNegativeNumber);
}

void add_twist_options(CLI::App* cmd, TwistOptions* opts) {
  cmd->add_option("--twist", opts->kind,
                  "Twist profile: zero, linear, or sine")
      ->check(CLI::IsMember({"zero", "linear", "sine"}));
  cmd->add_option("--slope", opts->slope, "Slope of the linear twist profile");
}

kirchhoff::AnalyticCurve make_curve(const CurveOptions& opts) {
  if (opts.kind == "line") return kirchhoff::make_line(opts.L);
  if (opts.kind == "arc") return kirchhoff::make_arc(opts.R, opts.L);
  return kirchhoff::make_helix(opts.a, opts.b, opts.L);
}

kirchhoff::TwistProfile make_twist(const TwistOptions& opts, double L) {
  if (opts.kind == "zero") return kirchhoff::make_zero_twist(L);
  if (opts.kind == "linear") return kirchhoff::make_linear_twist(L, opts.slope);
  return kirchhoff::make_sine_twist(L);
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw kirchhoff::InvalidInput("cannot open output file '" + path + "'");
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Discrete elastic rod toolkit"};
  app.require_subcommand(1);

  // --- discretize: equal-chord recovery rod of an analytic curve ----------
  CurveOptions disc_curve;
  TwistOptions disc_twist;
  int disc_n = 16;
  std::string disc_out;
  CLI::App* disc = app.add_subcommand(
      "discretize", "Sample a curve into an equal-chord rod with edge angles");
  add_curve_options(disc, &disc_curve);
  add_twist_options(disc, &disc_twist);
  disc->add_option("--n", disc_n, "Number of edges")->check(CLI::Range(2, 100000));
  disc->add_option("--out", disc_out, "Output rod file (.json or text)")
      ->required();

  // --- energy: report for a stored rod ------------------------------------
  std::string energy_rod;
  double energy_L = 1.0;
  kirchhoff::PenaltyParams energy_pen;
  kirchhoff::MaterialParams energy_mat;
  CLI::App* energy = app.add_subcommand(
      "energy", "Print the energy report of a rod file as JSON");
  energy->add_option("--rod", energy_rod, "Input rod file")->required();
  energy->add_option("--L", energy_L, "Reference length")
      ->required()
      ->check(CLI::PositiveNumber);
  energy->add_option("--alpha", energy_pen.alpha,
                     "Penalty exponent on |lambda - 1| (in (0,2))");
  energy->add_option("--beta", energy_pen.beta,
                     "Penalty exponent on the max edge (in (0,1))");
  energy->add_option("--ej", energy_mat.bending_rigidity, "Flexural rigidity");
  energy->add_option("--gj1", energy_mat.torsional_rigidity,
                     "Torsional rigidity");

  // --- frames: material frame field of a stored rod ------------------------
  std::string frames_rod, frames_out;
  double frames_L = 1.0;
  int frames_steps = 8;
  CLI::App* frames = app.add_subcommand(
      "frames",
      "Integrate rotation-minimizing frames along a rod's interpolant, apply "
      "its twist angles, and write them as CSV");
  frames->add_option("--rod", frames_rod, "Input rod file")->required();
  frames->add_option("--L", frames_L, "Reference length")
      ->required()
      ->check(CLI::PositiveNumber);
  frames->add_option("--steps", frames_steps, "Integration steps per interval")
      ->check(CLI::Range(1, 4096));
  frames->add_option("--out", frames_out, "Output CSV file")->required();

  // --- spline: sampled interpolant of a stored rod -------------------------
  std::string spline_rod, spline_out;
  double spline_L = 1.0;
  int spline_samples = 256;
  CLI::App* spline = app.add_subcommand(
      "spline", "Sample a rod's interpolant (position and derivatives) as CSV");
  spline->add_option("--rod", spline_rod, "Input rod file")->required();
  spline->add_option("--L", spline_L, "Reference length")
      ->required()
      ->check(CLI::PositiveNumber);
  spline->add_option("--samples", spline_samples, "Number of sample rows")
      ->check(CLI::Range(2, 10000000));
  spline->add_option("--out", spline_out, "Output CSV file")->required();

  // --- converge: recovery sweep over N -------------------------------------
  CurveOptions conv_curve;
  TwistOptions conv_twist;
  std::vector<int> conv_ns = kirchhoff::default_sweep();
  kirchhoff::PenaltyParams conv_pen;
  kirchhoff::MaterialParams conv_mat;
  std::string conv_out;
  bool conv_no_frames = false;
  CLI::App* conv = app.add_subcommand(
      "converge", "Discretize at several N and tabulate energies and errors");
  add_curve_options(conv, &conv_curve);
  add_twist_options(conv, &conv_twist);
  conv->add_option("--n-list", conv_ns, "Comma-separated list of edge counts")
      ->delimiter(',');
  conv->add_option("--alpha", conv_pen.alpha, "Penalty exponent on |lambda-1|");
  conv->add_option("--beta", conv_pen.beta, "Penalty exponent on the max edge");
  conv->add_option("--ej", conv_mat.bending_rigidity, "Flexural rigidity");
  conv->add_option("--gj1", conv_mat.torsional_rigidity, "Torsional rigidity");
  conv->add_flag("--no-frames", conv_no_frames,
                 "Skip the frame-distance column (faster)");
  conv->add_option("--out", conv_out, "Output CSV file")->required();

  // --- counterexample: uneven-spacing chain --------------------------------
  int counter_n = 10;
  CLI::App* counter = app.add_subcommand(
      "counterexample",
      "Print the uneven-spacing chain (edge penalty diverges while the "
      "interpolant stays fixed) as JSON");
  counter->add_option("--n", counter_n, "Number of edges")
      ->check(CLI::Range(3, 400));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (disc->parsed()) {
    const kirchhoff::AnalyticCurve curve = make_curve(disc_curve);
    const kirchhoff::TwistProfile twist = make_twist(disc_twist, disc_curve.L);
    const kirchhoff::FramedDiscreteRod rod =
        kirchhoff::recovery_rod(curve, twist, disc_n);
    kirchhoff::save_rod(rod, disc_out);
    std::cerr << "wrote " << disc_out << " (" << rod.rod.segment_count()
              << " edges)\n";
  } else if (energy->parsed()) {
    const kirchhoff::FramedDiscreteRod rod = kirchhoff::load_rod(energy_rod);
    energy_pen.L = energy_L;
    const kirchhoff::EnergyReport report =
        kirchhoff::total_energy(rod, energy_pen, energy_mat);
    std::cout << kirchhoff::energy_report_json(report) << '\n';
  } else if (frames->parsed()) {
    const kirchhoff::FramedDiscreteRod rod = kirchhoff::load_rod(frames_rod);
    const kirchhoff::SplineCurve curve(rod.rod, frames_L);
    const kirchhoff::TwistFunction twist(rod, frames_L);
    const kirchhoff::FrameField bishop = kirchhoff::integrate_bishop(
        curve, kirchhoff::Frame::from_tangent(curve.deriv1(0.0)), frames_steps);
    const kirchhoff::FrameField material = kirchhoff::apply_twist(bishop, twist);
    std::ofstream out = open_output(frames_out);
    kirchhoff::write_frames_csv(material, out);
  } else if (spline->parsed()) {
    const kirchhoff::FramedDiscreteRod rod = kirchhoff::load_rod(spline_rod);
    const kirchhoff::SplineCurve curve(rod.rod, spline_L);
    std::ofstream out = open_output(spline_out);
    kirchhoff::write_spline_csv(curve, spline_samples, out);
  } else if (conv->parsed()) {
    const kirchhoff::AnalyticCurve curve = make_curve(conv_curve);
    const kirchhoff::TwistProfile twist = make_twist(conv_twist, conv_curve.L);
    const kirchhoff::ConvergenceTable table = kirchhoff::converge(
        curve, twist, conv_ns, conv_pen, conv_mat, !conv_no_frames);
    std::ofstream out = open_output(conv_out);
    kirchhoff::write_table_csv(table, out);
  } else if (counter->parsed()) {
    const kirchhoff::CounterexampleReport report =
        kirchhoff::counterexample_spacing(counter_n);
    std::cout << kirchhoff::counterexample_json(report) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const kirchhoff::InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const kirchhoff::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
}
