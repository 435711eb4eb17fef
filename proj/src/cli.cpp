#include "kakeya/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "kakeya/json_io.hpp"

namespace kakeya {

namespace {

double tolerance_from_env() {
  const char* env = std::getenv("KAKEYA_TOL");
  if (env == nullptr || *env == '\0') return default_real_tolerance;
  const std::string text(env);
  double tol = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), tol);
  if (ec != std::errc() || ptr != text.data() + text.size() || !(tol > 0.0))
    throw Error(ErrorCode::InvalidInput, "KAKEYA_TOL must be a positive number, got '" + text + "'");
  return tol;
}

void emit(const Json& j, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-")
    out << dump(j);
  else
    write_json_file(path, j);
}

struct ConstructArgs {
  std::string seed;
  std::optional<std::uint64_t> q;
  std::optional<std::size_t> N;
  std::size_t dim = 0;
  std::string out;
};

int do_construct(const ConstructArgs& a, std::ostream& out, std::ostream& err) {
  const double tol = tolerance_from_env();
  PlanarSeed seed = [&] {
    if (a.seed == "conic") {
      if (!a.q || a.N) throw Error(ErrorCode::InvalidInput, "--seed conic takes --q and not --N");
      return dual_conic_seed(*a.q);
    }
    if (a.seed == "ngon") {
      if (!a.N || a.q) throw Error(ErrorCode::InvalidInput, "--seed ngon takes --N and not --q");
      return regular_ngon_seed(*a.N, tol);
    }
    if (a.seed.rfind("file:", 0) == 0) {
      if (a.q || a.N) throw Error(ErrorCode::InvalidInput, "--seed file:<path> takes neither --q nor --N");
      return seed_from_json(read_json_file(a.seed.substr(5)), tol);
    }
    throw Error(ErrorCode::InvalidInput, "--seed must be conic, ngon or file:<path>");
  }();
  KakeyaSet K = assemble(seed, a.dim);
  emit(kakeya_to_json(K), a.out, out);
  err << "constructed " << K.lines.size() << " lines and " << K.points.size() << " points over "
      << K.field.describe() << "\n";
  return exit_ok;
}

int do_verify(const std::string& path, std::optional<std::uint64_t> r, bool verbose, std::ostream& out) {
  KakeyaSet K = kakeya_from_json(read_json_file(path), tolerance_from_env());
  auto reports = verify_all(K, r, verbose);
  out << dump(verify_reports_to_json(reports));
  for (const auto& rep : reports)
    if (!rep.pass) return exit_failed;
  return exit_ok;
}

int do_bound(std::uint64_t N, std::uint64_t dim, std::optional<std::uint64_t> r, bool optimize,
             std::uint64_t r_max, std::ostream& out) {
  if (r.has_value() == optimize)
    throw Error(ErrorCode::InvalidInput, "bound needs exactly one of --r and --optimize");
  BoundReport rep = optimize ? bound_best(N, dim, r_max) : bound_grid(N, dim, *r);
  out << dump(bound_report_to_json(rep));
  return exit_ok;
}

int do_certify(const std::string& path, std::uint64_t r, const std::string& out_path, std::ostream& out) {
  KakeyaSet K = kakeya_from_json(read_json_file(path), tolerance_from_env());
  Certificate c = certify_theorem6(K, r);
  emit(certificate_to_json(c), out_path, out);
  return c.verdict == Certificate::Verdict::fail ? exit_failed : exit_ok;
}

int do_seed_report(const std::string& path, std::ostream& out) {
  PlanarSeed seed = seed_from_json(read_json_file(path), tolerance_from_env());
  SeedReport rep = seed_report(seed);
  out << dump(seed_report_to_json(rep));
  return rep.pass ? exit_ok : exit_failed;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kakeya set construction and verification over finite fields, Q and R", "kakeya"};
  app.require_subcommand(1);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "lift a planar seed to a Kakeya set in dimension --dim");
  construct->add_option("--seed", ca.seed, "conic, ngon or file:<path>")->required();
  construct->add_option("--q", ca.q, "prime order for the dual conic seed");
  construct->add_option("--N", ca.N, "number of sides for the regular N-gon seed");
  construct->add_option("--dim", ca.dim, "ambient dimension n")->required();
  construct->add_option("--out", ca.out, "output path (stdout if omitted)");

  std::string path;
  std::optional<std::uint64_t> r;
  bool verbose = false;
  auto* verify = app.add_subcommand("verify", "re-check a Kakeya set file");
  verify->add_option("path", path)->required();
  verify->add_option("--r", r, "also check the counting bound at this r");
  verify->add_flag("--verbose", verbose, "list every witness");

  std::uint64_t bN = 0, bdim = 0, r_max = 64;
  bool optimize = false;
  auto* bound = app.add_subcommand("bound", "lower bound for sets containing an N^(n-1) grid of directions");
  bound->add_option("--N", bN)->required();
  bound->add_option("--dim", bdim)->required();
  bound->add_option("--r", r);
  bound->add_flag("--optimize", optimize, "maximize over r = 1..r-max");
  bound->add_option("--r-max", r_max);

  std::uint64_t cr = 0;
  std::string out_path;
  auto* certify = app.add_subcommand("certify", "solve for a vanishing polynomial and attest its multiplicities");
  certify->add_option("path", path)->required();
  certify->add_option("--r", cr)->required();
  certify->add_option("--out", out_path, "output path (stdout if omitted)");

  auto* report = app.add_subcommand("seed-report", "check a planar seed file");
  report->add_option("path", path)->required();

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_invalid;
  }

  try {
    if (*construct) return do_construct(ca, out, err);
    if (*verify) return do_verify(path, r, verbose, out);
    if (*bound) {
      if (bN < 1 || bdim < 1) throw Error(ErrorCode::InvalidInput, "--N and --dim must be positive");
      if (r && *r < 1) throw Error(ErrorCode::InvalidInput, "--r must be >= 1");
      if (r_max < 1) throw Error(ErrorCode::InvalidInput, "--r-max must be >= 1");
      return do_bound(bN, bdim, r, optimize, r_max, out);
    }
    if (*certify) return do_certify(path, cr, out_path, out);
    if (*report) return do_seed_report(path, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_invalid;
  }
  return exit_invalid;
}

} // namespace kakeya
