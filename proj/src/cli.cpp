#include "tperfect/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "tperfect/canonical.hpp"
#include "tperfect/color.hpp"
#include "tperfect/io.hpp"
#include "tperfect/polytope.hpp"
#include "tperfect/recognize.hpp"
#include "tperfect/report.hpp"
#include "tperfect/tminor.hpp"

namespace tperfect::cli {

namespace {

struct Input {
  Graph graph;
  std::string digest;
};

Input load(const std::string& path, std::istream& in) {
  const std::string text = read_text(path, in);
  return {parse_graph(text), input_digest(text)};
}

std::string join(const std::vector<Vertex>& vs) {
  std::string s;
  for (Vertex v : vs) s += (s.empty() ? "" : " ") + std::to_string(v);
  return s;
}

std::string describe(const Certificate& c, std::size_t components) {
  return std::visit(
      [&](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, AcceptanceTrace>) {
          return "acceptance trace over " + std::to_string(components) + " component(s)";
        } else if constexpr (std::is_same_v<T, PatternCertificate>) {
          return "induced " + x.match.name.to_string() + " on " + join(x.match.embedding.image);
        } else if constexpr (std::is_same_v<T, TMinorWitness>) {
          std::string s = "forbidden t-minor";
          std::istringstream lines(x.certificate.script());
          for (std::string line; std::getline(lines, line);) s += "\n  " + line;
          return s;
        } else if constexpr (std::is_same_v<T, StarViolation>) {
          return "five-hole " + join(x.hole.cycle) + ": " + x.check.reason;
        } else {
          return "induced odd hole of length " + std::to_string(x.hole.length()) + ": " + join(x.hole.cycle);
        }
      },
      c);
}

PatternName gen_name(const std::vector<std::string>& words) {
  const std::string& name = words.at(0);
  auto number = [&](std::size_t i) {
    if (i >= words.size()) throw GraphError("'" + name + "' needs a size parameter");
    try {
      std::size_t used = 0;
      const int v = std::stoi(words[i], &used);
      if (used != words[i].size()) throw std::invalid_argument(words[i]);
      return v;
    } catch (const std::logic_error&) {
      throw GraphError("'" + words[i] + "' is not an integer");
    }
  };
  auto no_more = [&](std::size_t used) {
    if (words.size() > used) throw GraphError("unexpected parameter '" + words[used] + "' for " + name);
  };
  if (name == "cycle" || name == "path" || name == "complete" || name == "wheel") {
    no_more(2);
    const int l = number(1);
    if (name == "cycle") return PatternName::cycle(l);
    if (name == "path") return PatternName::path(l);
    if (name == "complete") return PatternName::complete(l);
    return PatternName::wheel(l);
  }
  if (name == "figure3") {
    if (words.size() < 2) throw GraphError("figure3 needs a variant a, b or c");
    std::string spec = "figure3" + words[1];
    if (words.size() > 2) {
      spec += "[";
      for (std::size_t i = 2; i < words.size(); ++i) spec += (i > 2 ? "," : "") + std::to_string(number(i));
      spec += "]";
    }
    return PatternName::parse(spec);
  }
  no_more(1);
  return PatternName::parse(name);
}

struct Common {
  bool json = false;
  std::string file;
};

struct CorpusRow {
  std::string text;
  Json json;
  int status = kDefinite;
};

class Runner {
 public:
  Runner(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err)
      : args_(std::move(args)), in_(in), out_(out), err_(err), start_(std::chrono::steady_clock::now()) {}

  int emit(const Json& payload, const std::string& digest, const std::vector<std::string>& fallback = {}) {
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    Json report = {{"command", args_}, {"input_digest", digest}, {"result", payload}, {"fallback_steps_used", fallback},
                   {"wall_time_ms", ms}};
    out_ << report.dump(2) << '\n';
    return kDefinite;
  }

  int recognize_cmd(const Common& c, bool bounded) {
    const Input input = load(c.file, in_);
    RecognizeOptions opts;
    if (bounded) opts.hole_search = HoleSearchMode::Bounded;
    const Verdict v = recognize(input.graph, opts);
    if (c.json) {
      emit(to_json(v), input.digest, v.fallback_steps());
    } else {
      out_ << "answer: " << to_string(v.answer) << '\n';
      out_ << "branch: " << to_string(v.branch()) << '\n';
      out_ << "certificate: " << describe(v.certificate, v.components.size()) << '\n';
      const auto fb = v.fallback_steps();
      out_ << "fallback steps:" << (fb.empty() ? " none" : "") << '\n';
      for (const auto& s : fb) out_ << "  " << s << '\n';
    }
    return v.answer == Answer::Inconclusive ? kInconclusive : kDefinite;
  }

  int color_cmd(const Common& c) {
    const Input input = load(c.file, in_);
    const Coloring col = three_color(input.graph);
    if (c.json) return emit(to_json(col), input.digest);
    out_ << "colors: " << col.color_count() << '\n';
    out_ << "branch: " << to_string(col.branch()) << '\n';
    const auto classes = col.classes();
    for (std::size_t i = 0; i < classes.size(); ++i) out_ << "class " << i << ": " << join(classes[i].members()) << '\n';
    return kDefinite;
  }

  int oracle_cmd(const Common& c, const std::string& mode, int wmax) {
    const Input input = load(c.file, in_);
    if (mode == "strong") {
      const auto r = strong_t_perfect_check(input.graph, wmax);
      if (c.json) return emit(to_json(r), input.digest);
      out_ << r.summary() << '\n';
      return kDefinite;
    }
    const auto vertices = enumerate_vertices(build_system(input.graph));
    const bool tp = t_perfect_oracle(input.graph);
    if (c.json) {
      Json vs = Json::array();
      for (const auto& x : vertices) {
        Json row = Json::array();
        for (const auto& xi : x) row.push_back(format_rational(xi));
        vs.push_back(std::move(row));
      }
      return emit({{"t_perfect", tp}, {"vertex_count", vertices.size()}, {"vertices", vs}}, input.digest);
    }
    out_ << "t-perfect: " << (tp ? "yes" : "no") << '\n';
    out_ << "vertices: " << vertices.size() << '\n';
    for (const auto& x : vertices) out_ << "  " << format_vector(x) << '\n';
    return kDefinite;
  }

  int tminor_cmd(const Common& c, std::optional<std::size_t> budget) {
    const Input input = load(c.file, in_);
    TMinorOptions opts = TMinorOptions::defaults_for(input.graph);
    if (budget) opts.budget = *budget == 0 ? std::nullopt : budget;
    const auto r = has_forbidden_t_minor(input.graph, opts);
    const int code = r.outcome == TMinorOutcome::Inconclusive ? kInconclusive : kDefinite;
    if (c.json) {
      emit(to_json(r), input.digest);
      return code;
    }
    if (r.certificate)
      out_ << r.certificate->script();
    else
      out_ << to_string(r.outcome) << " after " << r.states_explored << " states\n";
    return code;
  }

  int holes_cmd(const Common& c, int min_len, std::optional<int> max_len) {
    const Input input = load(c.file, in_);
    const auto holes = enumerate_induced_odd_cycles(input.graph, min_len, max_len);
    if (c.json) {
      Json hs = Json::array();
      for (const auto& h : holes) hs.push_back(to_json(h));
      return emit({{"count", holes.size()}, {"cycles", hs}}, input.digest);
    }
    for (const auto& h : holes) out_ << join(h.cycle) << '\n';
    return kDefinite;
  }

  int gen_cmd(const std::vector<std::string>& words, const std::string& format, bool fork_free) {
    if (words.empty()) throw GraphError("gen needs a graph name");
    if (words[0] == "all") {
      if (words.size() != 2) throw GraphError("usage: gen all <order>");
      const int n = std::stoi(words[1]);
      if (n < 0 || n > 10) throw GraphError("gen all supports orders 0..10");
      for (const auto& g : enumerate_graphs(n))
        if (!fork_free || is_fork_free(g)) out_ << format_graph6(g) << '\n';
      return kDefinite;
    }
    const Graph g = named_graph(gen_name(words));
    out_ << (format == "graph6" ? format_graph6(g) + "\n" : format_edge_list(g));
    return kDefinite;
  }

  int corpus_cmd(const Common& c, int jobs) {
    const std::string text = read_text(c.file, in_);
    std::vector<std::string> lines;
    {
      std::istringstream s(text);
      for (std::string line; std::getline(s, line);) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        lines.push_back(line);
      }
    }
    std::vector<CorpusRow> rows(lines.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < lines.size(); i = next++) rows[i] = corpus_line(lines[i], i + 1);
    };
    const int n_threads = std::max(1, std::min<int>(jobs, static_cast<int>(lines.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::size_t disagreements = 0, inconclusive = 0, errors = 0, skipped = 0, checked = 0;
    for (const auto& r : rows) {
      if (c.json)
        out_ << r.json.dump() << '\n';
      else
        out_ << r.text << '\n';
      switch (r.status) {
        case kDisagreement: ++disagreements; break;
        case kInconclusive: ++inconclusive; break;
        case kInputError: ++errors; break;
        default: break;
      }
      if (r.json.contains("skipped")) ++skipped;
      else if (r.status != kInputError) ++checked;
    }
    Json summary = {{"lines", rows.size()},       {"checked", checked},           {"skipped_fork", skipped},
                    {"disagreements", disagreements}, {"inconclusive", inconclusive}, {"errors", errors},
                    {"input_digest", input_digest(text)}};
    if (c.json)
      out_ << Json{{"summary", summary}}.dump() << '\n';
    else
      out_ << "# lines " << rows.size() << ", checked " << checked << ", skipped (fork) " << skipped
           << ", disagreements " << disagreements << ", inconclusive " << inconclusive << ", errors " << errors << '\n';
    if (disagreements > 0) return kDisagreement;
    if (errors > 0) return kInputError;
    if (inconclusive > 0) return kInconclusive;
    return kDefinite;
  }

 private:
  static CorpusRow corpus_line(const std::string& g6, std::size_t line_no) {
    CorpusRow r;
    r.json = {{"line", line_no}, {"graph6", g6}};
    Graph g;
    try {
      g = parse_graph6(g6);
    } catch (const GraphError& e) {
      r.status = kInputError;
      r.json["error"] = e.what();
      r.text = g6 + " error: " + e.what();
      return r;
    }
    if (!is_fork_free(g)) {
      r.json["skipped"] = "contains a fork";
      r.text = g6 + " skipped: contains a fork";
      return r;
    }
    const Verdict v = recognize(g);
    const auto m = has_forbidden_t_minor(g);
    const bool oracle = t_perfect_oracle(g);
    const std::string rec = to_string(v.answer);
    const std::string tm = to_string(m.outcome);
    r.json["recognize"] = rec;
    r.json["t_minor"] = tm;
    r.json["oracle"] = oracle ? "t-perfect" : "not-t-perfect";
    if (v.answer == Answer::Inconclusive || m.outcome == TMinorOutcome::Inconclusive) {
      r.status = kInconclusive;
    } else {
      const bool a = v.answer == Answer::TPerfect;
      const bool b = m.outcome == TMinorOutcome::Absent;
      if (a != b || b != oracle) r.status = kDisagreement;
    }
    const char* verdict = r.status == kDisagreement ? "DISAGREE" : r.status == kInconclusive ? "inconclusive" : "agree";
    r.json["status"] = verdict;
    r.text = g6 + " recognize=" + rec + " t-minor=" + tm + " oracle=" + (oracle ? "t-perfect" : "not-t-perfect") + " " +
             verdict;
    return r;
  }

  std::vector<std::string> args_;
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Recognition, colouring and polyhedral oracles for fork-free t-perfect graphs"};
  app.name("tperfect");
  app.require_subcommand(1);
  Runner runner(args, in, out, err);

  Common rec_opts, col_opts, orc_opts, tm_opts, holes_opts, corpus_opts;
  bool bounded = false;
  auto* rec = app.add_subcommand("recognize", "Decide t-perfection of a fork-free graph");
  rec->add_option("graphfile", rec_opts.file, "Edge list or graph6 file, '-' for stdin")->required();
  rec->add_flag("--json", rec_opts.json, "Machine-readable report");
  rec->add_flag("--bounded", bounded, "Search odd holes of length 7..19 only");

  auto* col = app.add_subcommand("color", "Three-colour a t-perfect fork-free graph");
  col->add_option("graphfile", col_opts.file)->required();
  col->add_flag("--json", col_opts.json);

  std::string mode = "tperfect";
  int wmax = 1;
  auto* orc = app.add_subcommand("oracle", "Polytope integrality or w-cover check");
  orc->add_option("graphfile", orc_opts.file)->required();
  orc->add_option("--mode", mode)->check(CLI::IsMember({"tperfect", "strong"}));
  orc->add_option("--wmax", wmax, "Largest weight in the strong check grid")->check(CLI::Range(0, 100));
  orc->add_flag("--json", orc_opts.json);

  std::optional<std::size_t> budget;
  auto* tm = app.add_subcommand("tminor", "Search for a forbidden t-minor");
  tm->add_option("graphfile", tm_opts.file)->required();
  tm->add_option("--budget", budget, "Maximum states to expand, 0 for unlimited");
  tm->add_flag("--json", tm_opts.json);

  int min_len = 5;
  std::optional<int> max_len;
  auto* holes = app.add_subcommand("holes", "List induced odd cycles");
  holes->add_option("graphfile", holes_opts.file)->required();
  holes->add_option("--min", min_len)->check(CLI::Range(3, 1 << 20));
  holes->add_option("--max", max_len);
  holes->add_flag("--json", holes_opts.json);

  std::vector<std::string> gen_words;
  std::string format = "edgelist";
  bool fork_free = false;
  auto* gen = app.add_subcommand("gen", "Emit a named graph, or 'all <n>' for every graph of order n");
  gen->add_option("name", gen_words, "Name and parameters, e.g. 'wheel 5' or 'figure3 b 1 3'")->required();
  gen->add_option("--format", format)->check(CLI::IsMember({"edgelist", "graph6"}));
  gen->add_flag("--fork-free", fork_free, "With 'all': only fork-free graphs");

  int jobs = 1;
  auto* corpus = app.add_subcommand("corpus", "Cross-check recognize, t-minor search and polytope oracle on graph6 lines");
  corpus->add_option("graphfile", corpus_opts.file)->required();
  corpus->add_option("--jobs", jobs)->check(CLI::Range(1, 256));
  corpus->add_flag("--json", corpus_opts.json);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (*rec) return runner.recognize_cmd(rec_opts, bounded);
    if (*col) return runner.color_cmd(col_opts);
    if (*orc) return runner.oracle_cmd(orc_opts, mode, wmax);
    if (*tm) return runner.tminor_cmd(tm_opts, budget);
    if (*holes) return runner.holes_cmd(holes_opts, min_len, max_len);
    if (*gen) return runner.gen_cmd(gen_words, format, fork_free);
    if (*corpus) return runner.corpus_cmd(corpus_opts, jobs);
  } catch (const ScopeError& e) {
    err << "error: " << e.what() << " (fork at " << join(e.fork().image) << ")\n";
    return kInputError;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kInputError;
}

}  // namespace tperfect::cli
