// Copyright 2026 The WLC Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wlc/embeddings.h"
#include "wlc/expression.h"
#include "wlc/error.h"
#include "wlc/groups.h"
#include "wlc/hypergeometric.h"
#include "wlc/parse.h"
#include "wlc/scan_io.h"
#include "wlc/theta.h"

namespace wlc {

namespace {

using Json = nlohmann::ordered_json;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse:
    case ErrorCode::kUnknownName:
      return kExitParse;
    case ErrorCode::kNoTupleFound:
      return kExitSearchFailure;
    default:
      return kExitDomain;
  }
}

// Parses a flag value; errors are prefixed with the flag name.
template <typename F>
auto parse_flag(const std::string& flag, const std::string& text, F f) {
  try {
    return f(text);
  } catch (const Error& e) {
    throw Error(e.code(), flag + ": " + e.message());
  }
}

std::string quote_arg(const std::string& a) {
  const bool plain = !a.empty() && a.find_first_not_of(
                                       "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"
                                       "0123456789_./,:=+-") == std::string::npos;
  if (plain) return a;
  std::string q = "'";
  for (char c : a) q += (c == '\'') ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

std::string point_text(const Point& p) {
  return format_double(p.z().real()) + "," + format_double(p.z().imag()) + "," +
         format_double(p.t());
}

class Emitter {
 public:
  Emitter(const RunConfig& cfg, const std::vector<std::string>& args, std::ostream& fallback)
      : cfg_(cfg), out_(&fallback) {
    for (const std::string& a : args) command_line_ += (command_line_.empty() ? "" : " ") + quote_arg(a);
    if (!cfg.output.empty()) {
      file_ = std::make_unique<std::ofstream>(cfg.output);
      if (!*file_) throw Error(ErrorCode::kParse, "--output: cannot open " + cfg.output);
      out_ = file_.get();
    }
  }

  Json config_json() const {
    Json j;
    j["command"] = cfg_.command;
    j["eps"] = cfg_.eps;
    j["tol"] = cfg_.tol;
    j["seed"] = cfg_.seed;
    j["depth"] = cfg_.depth;
    j["output"] = cfg_.output;
    j["format"] = cfg_.format;
    return j;
  }

  Json header_json() const {
    Json j;
    j["version"] = WLC_VERSION;
    j["command_line"] = command_line_;
    j["config"] = config_json();
    return j;
  }

  void comment_header() {
    write_comment_header(*out_, {{"wlc", WLC_VERSION},
                                 {"command", command_line_},
                                 {"config", config_json().dump()}});
  }

  // Key/value results: JSON object, or "key: value" lines.
  void record(const Json& fields) {
    if (cfg_.format == "json") {
      Json j;
      j["header"] = header_json();
      for (auto it = fields.begin(); it != fields.end(); ++it) j[it.key()] = it.value();
      *out_ << j.dump(2) << '\n';
      return;
    }
    comment_header();
    for (auto it = fields.begin(); it != fields.end(); ++it) {
      *out_ << it.key() << ": ";
      if (it.value().is_string()) {
        *out_ << it.value().get<std::string>();
      } else if (it.value().is_number_float()) {
        *out_ << format_double(it.value().get<double>());
      } else {
        *out_ << it.value().dump();
      }
      *out_ << '\n';
    }
  }

  void table(const ScanTable& t) {
    if (cfg_.format == "json") {
      Json j;
      j["header"] = header_json();
      j["columns"] = t.columns;
      j["rows"] = t.rows;
      *out_ << j.dump() << '\n';
      return;
    }
    comment_header();
    if (cfg_.format == "mesh") {
      write_mesh(*out_, t);
    } else {
      write_csv(*out_, t);
    }
  }

  void json_document(const Json& body) {
    Json j;
    j["header"] = header_json();
    for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
    *out_ << j.dump(2) << '\n';
  }

 private:
  RunConfig cfg_;
  std::ostream* out_;
  std::unique_ptr<std::ofstream> file_;
  std::string command_line_;
};

Json complex_fields(const std::string& key, std::complex<double> v) {
  Json j;
  j[key + "_re"] = v.real();
  j[key + "_im"] = v.imag();
  return j;
}

Json heights_json(const std::vector<double>& h) {
  Json j = Json::array();
  for (double v : h) j.push_back(v);
  return j;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Theta functions, Bianchi groups and the Whitehead link complement"};
  app.set_version_flag("--version", std::string(WLC_VERSION));
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--eps", cfg.eps, "Absolute truncation target")->capture_default_str();
  app.add_option("--tol", cfg.tol, "Invariance tolerance")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  app.add_option("--depth", cfg.depth, "Word length bound for reduction and searches")
      ->capture_default_str();
  app.add_option("-o,--output", cfg.output, "Output file (default: standard output)");
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "mesh"}))
      ->capture_default_str();

  // Flag storage.
  std::string char_s, point_s, tau_s, fn_s, group_s = "whitehead", tuple_s, matrix_s, word_s;
  std::string map_s = "octa", from_s, to_s, x_s, p_s = "inf", q_s = "inf", r_s = "inf";
  int samples = 20, elems = 20, word_len = 6, max_len = 3, points = 1000;
  int search_samples = 100, search_elems = 30, catalog_samples = 20;
  double a = 0.5, b = 0.5, c = 1.0;
  std::optional<int> cusp_len;

  std::function<int(Emitter&)> action;
  auto sub = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    CLI::App* s = parent->add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  CLI::App* theta = sub(&app, "theta", "Siegel theta constants");
  theta->require_subcommand(1);
  CLI::App* theta_eval = sub(theta, "eval", "Evaluate theta[a;b] at a point of H^3 or at tau");
  theta_eval->add_option("--char", char_s, "Characteristic \"a1,a2;b1,b2\"")->required();
  auto* pt_opt = theta_eval->add_option("--point", point_s, "Point \"re,im,t\" of H^3");
  auto* tau_opt = theta_eval->add_option("--tau", tau_s, "Matrix \"t11,t12;t21,t22\"");
  pt_opt->excludes(tau_opt);
  theta_eval->callback([&] {
    action = [&](Emitter& em) {
      const ThetaChar ch = parse_flag("--char", char_s, parse_theta_char);
      if (point_s.empty() == tau_s.empty())
        throw Error(ErrorCode::kParse, "theta eval: give exactly one of --point, --tau");
      const TauMat tau = !point_s.empty()
                             ? TauMat::from_point(parse_flag("--point", point_s, parse_point))
                             : parse_flag("--tau", tau_s, parse_tau);
      const ThetaEvaluation ev = siegel_theta_detailed(ch, tau, cfg.eps);
      Json j = complex_fields("value", ev.value);
      j["tail_bound"] = ev.tail_bound;
      j["radius"] = ev.radius;
      j["terms"] = ev.terms;
      j["basis"] = to_string(ev.basis);
      em.record(j);
      return kExitOk;
    };
  });

  CLI::App* lambda = sub(&app, "lambda", "Modular lambda (theta01/theta00)^4 at tau");
  lambda->add_option("--tau", tau_s, "Complex tau with Im tau > 0")->required();
  lambda->callback([&] {
    action = [&](Emitter& em) {
      const auto tau = parse_flag("--tau", tau_s, parse_complex);
      em.record(complex_fields("lambda", modular_lambda(tau, cfg.eps)));
      return kExitOk;
    };
  });

  CLI::App* check = sub(&app, "check", "Invariance test of a function under a group");
  check->add_option("--fn", fn_s, "Function id (const1, height, lambda1d, octa_t1..3, "
                                  "lambda_l1..4, expr:<expression>)")->required();
  check->add_option("--group", group_s, "Group name")->capture_default_str();
  check->add_option("--samples", samples, "Sample points")->capture_default_str();
  check->add_option("--elems", elems, "Sampled group elements")->capture_default_str();
  check->add_option("--word-len", word_len, "Maximal word length")->capture_default_str();
  check->add_option("--tuple", tuple_s, "Characteristic tuple \"c0|c1|c2|c3\"");
  check->callback([&] {
    action = [&](Emitter& em) {
      const GroupSpec& spec = parse_flag("--group", group_s,
                                         [](const std::string& s) -> const GroupSpec& {
                                           return group_spec(s);
                                         });
      InvarianceOptions opt;
      opt.max_word_len = word_len;
      opt.eps = cfg.eps;
      if (!tuple_s.empty()) opt.tuple = parse_flag("--tuple", tuple_s, parse_char_tuple);
      if (fn_s.rfind("expr:", 0) == 0) parse_flag("--fn", fn_s.substr(5), Expression::parse);
      const InvarianceReport r =
          invariance_test(fn_s, spec, samples, elems, cfg.tol, cfg.seed, opt);
      em.json_document(to_json(r));
      return r.passed() ? kExitOk : kExitInvarianceFailure;
    };
  });

  CLI::App* reduce = sub(&app, "reduce", "Reduce a point toward a fundamental domain");
  reduce->add_option("--point", point_s, "Point \"re,im,t\"")->required();
  reduce->add_option("--group", group_s, "Group name")->capture_default_str();
  reduce->callback([&] {
    action = [&](Emitter& em) {
      const Point p = parse_flag("--point", point_s, parse_point);
      const GroupSpec& spec = group_spec(group_s);
      const ReductionResult r = reduce_to_fd(p, spec, cfg.depth);
      Json j;
      j["point"] = point_text(r.point);
      j["word"] = word_to_string(spec, r.word);
      j["matrix"] = to_string(r.element.matrix);
      j["transposed"] = r.element.transposed;
      j["height_history"] = heights_json(r.height_history);
      em.record(j);
      return kExitOk;
    };
  });

  CLI::App* act_cmd = sub(&app, "act", "Apply a matrix or a group word to a point");
  act_cmd->add_option("--point", point_s, "Point \"re,im,t\"")->required();
  auto* mat_opt = act_cmd->add_option("--matrix", matrix_s, "Matrix [[a,b],[c,d]]");
  auto* word_opt = act_cmd->add_option("--word", word_s, "Word like \"g0 g1^-1 T\"");
  mat_opt->excludes(word_opt);
  act_cmd->add_option("--group", group_s, "Group for --word")->capture_default_str();
  act_cmd->callback([&] {
    action = [&](Emitter& em) {
      const Point p = parse_flag("--point", point_s, parse_point);
      if (matrix_s.empty() == word_s.empty())
        throw Error(ErrorCode::kParse, "act: give exactly one of --matrix, --word");
      GroupElement e;
      if (!matrix_s.empty()) {
        e.matrix = parse_flag("--matrix", matrix_s, parse_gmat2);
      } else {
        const GroupSpec& spec = group_spec(group_s);
        e = replay(spec, parse_flag("--word", word_s, [&](const std::string& s) {
                     return parse_word(spec, s);
                   }));
      }
      Json j;
      j["point"] = point_text(apply(e, p));
      j["matrix"] = to_string(e.matrix);
      j["transposed"] = e.transposed;
      em.record(j);
      return kExitOk;
    };
  });

  CLI::App* orbit = sub(&app, "orbit", "Orbit points under words of bounded length");
  orbit->add_option("--point", point_s, "Point \"re,im,t\"")->required();
  orbit->add_option("--group", group_s, "Group name")->capture_default_str();
  orbit->add_option("--max-len", max_len, "Maximal word length")->capture_default_str();
  orbit->callback([&] {
    action = [&](Emitter& em) {
      const Point p = parse_flag("--point", point_s, parse_point);
      ScanTable t{{"re_z", "im_z", "t"}, {}};
      for (const Point& q : orbit_points(p, group_spec(group_s), max_len))
        t.rows.push_back({q.z().real(), q.z().imag(), q.t()});
      em.table(t);
      return kExitOk;
    };
  });

  CLI::App* scan = sub(&app, "scan-embedding", "Sample reduced points and their image coordinates");
  scan->add_option("--map", map_s, "octa or lambda")
      ->check(CLI::IsMember({"octa", "lambda"}))
      ->capture_default_str();
  scan->add_option("--points", points, "Number of sample points")->capture_default_str();
  scan->add_option("--tuple", tuple_s, "Characteristic tuple (default: first found)");
  scan->add_option("--search-samples", search_samples, "Samples for the tuple search")
      ->capture_default_str();
  scan->callback([&] {
    action = [&](Emitter& em) {
      const CharTuple tuple =
          !tuple_s.empty() ? parse_flag("--tuple", tuple_s, parse_char_tuple)
                           : find_base_thetas(search_samples, search_elems, cfg.tol, cfg.seed)[0];
      const GroupSpec& spec = group_spec("gammaT2");
      const bool octa = map_s == "octa";
      ScanTable t;
      t.columns = octa ? std::vector<std::string>{"re_z", "im_z", "t", "t1", "t2", "t3"}
                       : std::vector<std::string>{"re_z", "im_z", "t", "l1", "l2", "l3", "l4"};
      const std::vector<Point> pts = random_points(points, cfg.seed);
      t.rows.resize(pts.size());
      for (std::size_t i = 0; i < pts.size(); ++i) {
        const Point q = reduce_to_fd(pts[i], spec, cfg.depth).point;
        const auto xi = theta_ratios(q, tuple, cfg.eps);
        std::vector<double>& row = t.rows[i];
        row = {q.z().real(), q.z().imag(), q.t()};
        if (octa) {
          row.insert(row.end(), xi.begin(), xi.end());
        } else {
          const LambdaCoords l = lambda_from_ratios(xi);
          row.insert(row.end(), {l.l1, l.l2, l.l3, l.l4});
        }
      }
      em.table(t);
      return kExitOk;
    };
  });

  CLI::App* find = sub(&app, "find-thetas", "Search admissible octahedron 4-tuples");
  find->add_option("--samples", search_samples, "Sample points (>= 100)")->capture_default_str();
  find->add_option("--elems", search_elems, "Sampled group elements")->capture_default_str();
  find->callback([&] {
    action = [&](Emitter& em) {
      const auto tuples = find_base_thetas(search_samples, search_elems, cfg.tol, cfg.seed);
      Json j;
      j["count"] = tuples.size();
      Json list = Json::array();
      for (const CharTuple& t : tuples) list.push_back(to_string(t));
      j["tuples"] = list;
      em.record(j);
      return kExitOk;
    };
  });

  CLI::App* catalog = sub(&app, "catalog", "The 256 characteristics with odd/even flags");
  catalog->add_option("--samples", catalog_samples, "Vanishing-scan samples")->capture_default_str();
  catalog->callback([&] {
    action = [&](Emitter& em) {
      Json list = Json::array();
      for (const CatalogEntry& e : deep_theta_catalog(catalog_samples)) {
        Json row;
        row["char"] = to_string(e.chars);
        row["odd"] = e.odd;
        row["level_one_plus_i"] = e.level_one_plus_i;
        list.push_back(row);
      }
      Json j;
      j["count"] = list.size();
      j["entries"] = list;
      em.json_document(j);
      return kExitOk;
    };
  });

  CLI::App* hg = sub(&app, "hg", "Gauss hypergeometric function");
  hg->require_subcommand(1);
  CLI::App* hg_eval = sub(hg, "eval", "2F1(a,b;c;x) by its power series");
  hg_eval->add_option("--a", a)->capture_default_str();
  hg_eval->add_option("--b", b)->capture_default_str();
  hg_eval->add_option("--c", c)->capture_default_str();
  hg_eval->add_option("--x", x_s, "Complex argument, |x| <= 0.999")->required();
  hg_eval->callback([&] {
    action = [&](Emitter& em) {
      const auto x = parse_flag("--x", x_s, parse_complex);
      em.record(complex_fields("value", gauss_2f1({a, b, c}, x, cfg.eps)));
      return kExitOk;
    };
  });
  CLI::App* hg_schwarz = sub(hg, "schwarz", "Schwarz map of E(1/2,1/2,1)");
  hg_schwarz->add_option("--x", x_s, "Real x in (0,1)")->required();
  hg_schwarz->callback([&] {
    action = [&](Emitter& em) {
      const auto x = parse_flag("--x", x_s, parse_complex);
      if (x.imag() != 0) throw Error(ErrorCode::kOutOfDomain, "--x: must be real");
      em.record(complex_fields("tau", schwarz_map_inf(x.real(), cfg.eps)));
      return kExitOk;
    };
  });
  CLI::App* hg_params = sub(hg, "params", "Triangle indices to (a, b, c)");
  hg_params->add_option("--p", p_s)->capture_default_str();
  hg_params->add_option("--q", q_s)->capture_default_str();
  hg_params->add_option("--r", r_s)->capture_default_str();
  hg_params->callback([&] {
    action = [&](Emitter& em) {
      const TriangleData t{parse_flag("--p", p_s, parse_triangle_index),
                           parse_flag("--q", q_s, parse_triangle_index),
                           parse_flag("--r", r_s, parse_triangle_index)};
      const HGParams h = params_from_indices(t);
      Json j;
      j["a"] = h.a;
      j["b"] = h.b;
      j["c"] = h.c;
      j["type"] = to_string(t.type());
      em.record(j);
      return kExitOk;
    };
  });

  CLI::App* cusp = sub(&app, "cusp-search", "Search a word mapping one cusp to another");
  cusp->add_option("--group", group_s, "Group name")->capture_default_str();
  cusp->add_option("--from", from_s, "Cusp: inf or a Gaussian integer")->required();
  cusp->add_option("--to", to_s, "Cusp: inf or a Gaussian integer")->required();
  cusp->add_option("--max-len", cusp_len, "Maximal word length (default: --depth)");
  cusp->callback([&] {
    action = [&](Emitter& em) {
      const GroupSpec& spec = group_spec(group_s);
      const Cusp from = parse_flag("--from", from_s, parse_cusp);
      const Cusp to = parse_flag("--to", to_s, parse_cusp);
      const int len = cusp_len.value_or(cfg.depth);
      const auto found = find_cusp_word(spec, from, to, len);
      Json j;
      j["from"] = to_string(from);
      j["to"] = to_string(to);
      j["max_len"] = len;
      j["found"] = found.has_value();
      if (found) {
        j["word"] = word_to_string(spec, found->word);
        j["matrix"] = to_string(found->matrix);
        j["transposed"] = found->transposed;
      } else {
        j["note"] = "no word within the length bound; this does not show that none exists";
      }
      em.record(j);
      return kExitOk;
    };
  });

  std::vector<std::string> rev(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rev.begin(), rev.end());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << (dynamic_cast<const CLI::CallForVersion*>(&e) ? std::string(WLC_VERSION) + "\n"
                                                           : app.help());
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitParse;
  }

  for (const CLI::App* s = &app; s != nullptr;) {
    const auto subs = s->get_subcommands();
    if (subs.empty()) break;
    s = subs.front();
    cfg.command += (cfg.command.empty() ? "" : " ") + s->get_name();
  }

  try {
    Emitter em(cfg, args, out);
    return action(em);
  } catch (const BudgetExhausted& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
}

}  // namespace wlc
