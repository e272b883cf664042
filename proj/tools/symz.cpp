// symz: command-line front end.
//
// Exit codes: 0 ok, 2 input error, 3 degenerate form (when required),
// 4 forms in different fibers of J, 5 invariant violation or failed check.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "symz/symz.hpp"

namespace {

enum Exit { kOk = 0, kInput = 2, kDegenerate = 3, kFiber = 4, kInternal = 5 };

std::string read_poly(const std::string& arg) {
  if (arg != "-") return arg;
  return std::string(std::istreambuf_iterator<char>(std::cin), {});
}

symz::SymForm load(const std::string& text, std::size_t nvars) {
  return symz::parse_poly(read_poly(text), nvars ? std::optional<std::size_t>(nvars) : std::nullopt);
}

void emit(const symz::Json& j, bool compact) { std::cout << (compact ? j.dump() : j.dump(2)) << '\n'; }

std::vector<std::size_t> parse_blocks(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(part, &used);
      if (used != part.size() || v <= 0) throw std::invalid_argument(part);
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw symz::InvalidSpecError("bad block size '" + part + "'");
    }
  }
  return out;
}

struct Common {
  std::size_t nvars = 0;
  std::uint64_t seed = 1;
  int trials = 5;
  bool compact = false;
  bool assume_finite = false;
  bool no_assume_finite = false;

  symz::VerifyOptions verify() const {
    symz::VerifyOptions o;
    o.seed = seed;
    o.trials = trials;
    if (assume_finite) o.assume_finite = true;
    if (no_assume_finite) o.assume_finite = false;
    return o;
  }
};

void add_verify_flags(CLI::App* cmd, Common& c) {
  cmd->add_option("--seed", c.seed, "seed for random group elements");
  cmd->add_option("--trials", c.trials, "random elements per check")->check(CLI::Range(1, 1000));
  auto* yes = cmd->add_flag("--assume-finite", c.assume_finite,
                            "take the order-(d-1) locus of Z(F) as finite");
  auto* no = cmd->add_flag("--no-assume-finite", c.no_assume_finite, "skip the checks that need a finite locus");
  yes->excludes(no);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetrizer algebras of symmetric forms"};
  app.require_subcommand(1);
  Common c;
  std::string poly, poly2, spec_file, kind = "random", blocks, nilpotent;
  bool require_nondeg = false;
  unsigned degree = 3;
  long bound = 10;
  std::uint64_t count = 1;
  std::size_t spec_nvars = 3;
  std::uint64_t spec_seed = 1;

  auto* analyze = app.add_subcommand("analyze", "full JSON report for one form");
  analyze->add_option("poly", poly, "polynomial, or - for standard input")->required();
  analyze->add_option("--nvars", c.nvars, "number of variables (default: inferred)");
  analyze->add_flag("--require-nondegenerate", require_nondeg, "exit 3 if the form is a cone");
  analyze->add_flag("--compact", c.compact, "single-line JSON");
  add_verify_flags(analyze, c);

  auto* recover = app.add_subcommand("recover", "the g with F~ = F^g for J(F) = J(F~)");
  recover->add_option("F", poly, "polynomial F")->required();
  recover->add_option("Ftilde", poly2, "polynomial F~")->required();
  recover->add_option("--nvars", c.nvars, "number of variables (default: inferred)");

  auto* check = app.add_subcommand("check", "run every applicable check; exit 5 on any failure");
  check->add_option("poly", poly, "polynomial, or - for standard input")->required();
  check->add_option("--nvars", c.nvars, "number of variables (default: inferred)");
  check->add_flag("--compact", c.compact, "single-line JSON");
  add_verify_flags(check, c);

  auto* generate = app.add_subcommand("generate", "print a corpus form");
  generate->add_option("kind", kind, "fermat | random | st_sum | cone | prescribed_nilpotent")->required();
  auto add_spec_flags = [&](CLI::App* cmd) {
    cmd->add_option("--nvars", spec_nvars, "number of variables")->default_val(3);
    cmd->add_option("--degree", degree, "degree")->default_val(3);
    cmd->add_option("--seed", spec_seed, "generator seed");
    cmd->add_option("--bound", bound, "coefficient bound")->default_val(10);
    cmd->add_option("--blocks", blocks, "st_sum block sizes, e.g. 1,2");
    cmd->add_option("--nilpotent", nilpotent, "prescribed matrix as JSON rows of rational strings");
  };
  add_spec_flags(generate);

  auto* census = app.add_subcommand("census", "one JSON line per generated form");
  census->add_option("specs", spec_file, "JSON spec file (array of spec objects)");
  census->add_option("--kind", kind, "generator kind when no spec file is given");
  census->add_option("--count", count, "consecutive seeds starting at --seed")->default_val(1);
  add_spec_flags(census);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*analyze) {
      const symz::SymForm f = load(poly, c.nvars);
      if (require_nondeg) {
        const auto nd = symz::is_nondegenerate(f);
        if (!nd.nondegenerate) {
          std::cerr << "symz: degenerate form, kernel:";
          for (const auto& v : nd.kernel) std::cerr << ' ' << symz::to_string(v);
          std::cerr << '\n';
          return kDegenerate;
        }
      }
      const auto rep = symz::analyze(f, c.verify());
      emit(symz::to_json(rep), c.compact);
      for (const auto& ck : rep.checks)
        if (ck.status == symz::CheckStatus::fail) {
          std::cerr << "symz: check " << ck.id << " failed: " << ck.detail << '\n';
          return kInternal;
        }
      return kOk;
    }
    if (*recover) {
      const symz::SymForm f = load(poly, c.nvars);
      const symz::SymForm ft = load(poly2, c.nvars ? c.nvars : f.nvars());
      emit(symz::matrix_json(symz::recover_symmetrizer(f, ft)), true);
      return kOk;
    }
    if (*check) {
      const symz::SymForm f = load(poly, c.nvars);
      const auto rep = symz::run_checks(f, c.verify());
      symz::Json j{{"polynomial", symz::print_poly(f)},
                   {"order_locus", symz::to_string(rep.locus)},
                   {"checks", symz::checks_json(rep.checks)}};
      emit(j, c.compact);
      return rep.any_failed() ? kInternal : kOk;
    }
    symz::GeneratorSpec spec = symz::make_spec(symz::parse_generator_kind(kind), spec_nvars, degree, spec_seed, bound);
    if (!blocks.empty()) spec.block_sizes = parse_blocks(blocks);
    if (!nilpotent.empty()) {
      try {
        spec.nilpotent = symz::matrix_from_json(symz::Json::parse(nilpotent));
      } catch (const symz::Json::exception& e) {
        throw symz::InvalidSpecError(std::string("bad --nilpotent matrix: ") + e.what());
      }
    }
    if (*generate) {
      std::cout << symz::print_poly(symz::generate(spec)) << '\n';
      return kOk;
    }
    std::vector<symz::GeneratorSpec> specs;
    if (!spec_file.empty()) {
      std::ifstream in(spec_file);
      if (!in) throw symz::InputError("cannot open " + spec_file);
      try {
        specs = symz::specs_from_json(symz::Json::parse(in));
      } catch (const symz::Json::parse_error& e) {
        throw symz::InvalidSpecError(std::string("spec file is not JSON: ") + e.what());
      }
    } else {
      symz::Json j = symz::spec_json(spec);
      j["count"] = count;
      specs = symz::specs_from_json(j);
    }
    for (const auto& row : symz::census(specs)) std::cout << symz::census_row_json(row).dump() << '\n';
    return kOk;
  } catch (const symz::FiberMismatchError& e) {
    std::cerr << "symz: " << e.what() << '\n';
    return kFiber;
  } catch (const symz::DegenerateFormError& e) {
    std::cerr << "symz: " << e.what() << '\n';
    return kDegenerate;
  } catch (const symz::InputError& e) {
    std::cerr << "symz: input error: " << e.what() << '\n';
    return kInput;
  } catch (const symz::InvalidSpecError& e) {
    std::cerr << "symz: invalid spec: " << e.what() << '\n';
    return kInput;
  } catch (const symz::UnsupportedDegreeError& e) {
    std::cerr << "symz: unsupported: " << e.what() << '\n';
    return kInput;
  } catch (const symz::Error& e) {
    std::cerr << "symz: internal error: " << e.what() << '\n';
    return kInternal;
  }
}
