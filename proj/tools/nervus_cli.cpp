// Copyright 2026 The Nervus Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command line front end. Everything goes through the C interface.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nervus/nervus.h"

namespace {

using nlohmann::json;

// Failure carrying the process exit code.
struct Exit {
  int code;
  std::string message;
};

void check(nv_status s) {
  if (s != NV_OK) throw Exit{static_cast<int>(s), nv_last_error()};
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Context = std::unique_ptr<nv_context, Deleter<nv_context, nv_context_free>>;
using Complex = std::unique_ptr<nv_complex, Deleter<nv_complex, nv_complex_free>>;
using PosetH = std::unique_ptr<nv_poset, Deleter<nv_poset, nv_poset_free>>;
using TowerH = std::unique_ptr<nv_tower, Deleter<nv_tower, nv_tower_free>>;
using Cloud = std::unique_ptr<nv_cloud, Deleter<nv_cloud, nv_cloud_free>>;

std::string take(char* s) {
  std::string out(s);
  nv_string_free(s);
  return out;
}

std::string sha256(const std::string& bytes) {
  char* hex = nullptr;
  check(nv_sha256_hex(bytes.data(), bytes.size(), &hex));
  return take(hex);
}

class Session {
 public:
  std::string read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Exit{NV_ERR_INPUT, "cannot read '" + path + "'"};
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    inputs_[path] = sha256(text);
    return text;
  }

  void write(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) throw Exit{NV_ERR_INPUT, "cannot write '" + path + "'"};
    files_[path] = sha256(text);
  }

  void print(const std::string& text) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    stdout_ += text;
  }

  void note_file(const std::string& path, const std::string& digest) { files_[path] = digest; }

  json report(const std::vector<std::string>& argv) const {
    json outputs = {{"stdout_sha256", sha256(stdout_)}, {"files", files_}};
    const auto parsed = json::parse(stdout_, nullptr, false);
    if (!parsed.is_discarded()) outputs["stdout"] = parsed;
    return {{"command", argv}, {"inputs", inputs_}, {"outputs", outputs}};
  }

 private:
  std::map<std::string, std::string> inputs_;
  std::map<std::string, std::string> files_;
  std::string stdout_;
};

nv_field parse_field(const std::string& name) {
  nv_field f;
  check(nv_field_parse(name.c_str(), &f));
  return f;
}

long cap_from_env() {
  const char* env = std::getenv("NERVUS_CAP");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v <= 0) throw Exit{NV_ERR_INPUT, "NERVUS_CAP must be a positive integer"};
  return v;
}

Context load_context(Session& s, const std::string& path) {
  nv_context* p = nullptr;
  check(nv_context_from_json(s.read(path).c_str(), &p));
  return Context(p);
}

std::string betti_report(const nv_complex* k, nv_field field) {
  char* out = nullptr;
  check(nv_complex_betti_json(k, field, &out));
  return take(out);
}

void write_complex(Session& s, const nv_complex* k, const std::string& path) {
  if (path.empty()) return;
  char* out = nullptr;
  check(nv_complex_to_json(k, &out));
  s.write(path, take(out));
}

double parse_eps(const std::string& text, const nv_cloud* cloud) {
  if (text == "auto") {
    double eps = 0;
    check(nv_cloud_connectivity_threshold(cloud, &eps));
    return eps;
  }
  std::size_t used = 0;
  double eps = 0;
  try {
    eps = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !(eps >= 0)) {
    throw Exit{NV_ERR_INPUT, "--eps must be a non-negative number or 'auto'"};
  }
  return eps;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nerves, Sorkin posets, incidence algebras and fractal towers"};
  app.require_subcommand(1);
  std::string report_path;
  bool timing = false;
  app.add_option("--report", report_path, "Write a JSON run report to this path");
  app.add_flag("--timing", timing, "Include wall-clock time in the run report");

  Session session;
  std::function<void()> run;

  std::string field_name = "Q";
  auto add_field = [&](CLI::App* cmd) {
    cmd->add_option("--field", field_name, "Coefficient field")
        ->check(CLI::IsMember({"Q", "GF2"}));
  };

  // nerve
  std::string kind, input, out_path;
  auto* nerve = app.add_subcommand("nerve", "Cech or Vietoris nerve of a context");
  nerve->add_option("kind", kind)->required()->check(CLI::IsMember({"cech", "vietoris"}));
  nerve->add_option("context", input)->required();
  nerve->add_option("--out", out_path, "Write the complex JSON here");
  add_field(nerve);
  nerve->callback([&] {
    run = [&] {
      auto p = load_context(session, input);
      nv_complex* k = nullptr;
      check(kind == "cech" ? nv_context_cech_nerve(p.get(), &k)
                           : nv_context_vietoris_nerve(p.get(), &k));
      Complex owned(k);
      write_complex(session, k, out_path);
      session.print(betti_report(k, parse_field(field_name)));
    };
  });

  // sorkin
  bool dot = false;
  auto* sorkin = app.add_subcommand("sorkin", "Specialization poset of a context");
  sorkin->add_option("context", input)->required();
  sorkin->add_flag("--dot", dot, "Print the Hasse diagram as DOT instead of JSON");
  sorkin->add_option("--out", out_path, "Write the poset JSON here");
  sorkin->callback([&] {
    run = [&] {
      auto p = load_context(session, input);
      nv_poset* k = nullptr;
      check(nv_context_sorkin(p.get(), &k));
      PosetH owned(k);
      char* text = nullptr;
      check(nv_poset_to_json(k, &text));
      const std::string poset = take(text);
      if (!out_path.empty()) session.write(out_path, poset);
      if (dot) {
        check(nv_poset_to_dot(k, &text));
        session.print(take(text));
      } else {
        session.print(poset);
      }
    };
  });

  // homology
  auto* homology = app.add_subcommand("homology", "Betti numbers of a complex");
  homology->add_option("complex", input)->required();
  add_field(homology);
  homology->callback([&] {
    run = [&] {
      nv_complex* k = nullptr;
      check(nv_complex_from_json(session.read(input).c_str(), &k));
      Complex owned(k);
      session.print(betti_report(k, parse_field(field_name)));
    };
  });

  // zapatrin
  std::string apply_path;
  auto* zapatrin = app.add_subcommand("zapatrin", "Zapatrin differential of a poset");
  zapatrin->add_option("poset", input)->required();
  zapatrin->add_option("--apply", apply_path, "Print d of the chain element in this file");
  add_field(zapatrin);
  zapatrin->callback([&] {
    run = [&] {
      nv_poset* k = nullptr;
      check(nv_poset_from_json(session.read(input).c_str(), &k));
      PosetH owned(k);
      char* text = nullptr;
      if (apply_path.empty()) {
        check(nv_poset_zapatrin_report(k, parse_field(field_name), &text));
      } else {
        check(nv_poset_apply_d(k, parse_field(field_name), session.read(apply_path).c_str(),
                               &text));
      }
      session.print(take(text));
    };
  });

  // refine
  std::string fine_path, coarse_path;
  auto* refine = app.add_subcommand("refine", "Check a refinement relation between contexts");
  refine->add_option("source", fine_path)->required();
  refine->add_option("target", coarse_path)->required();
  refine->add_option("relation", input)->required();
  refine->callback([&] {
    run = [&] {
      auto p = load_context(session, fine_path);
      auto q = load_context(session, coarse_path);
      char* text = nullptr;
      check(nv_refinement_check(p.get(), q.get(), session.read(input).c_str(), &text));
      session.print(take(text));
    };
  });

  // fractal
  std::string family;
  int level = 0, base = 4;
  std::string out_dir;
  auto* fractal = app.add_subcommand("fractal", "Approximation tower of a fractal");
  fractal->add_option("family", family)
      ->required()
      ->check(CLI::IsMember({"cantor", "carpet", "sponge", "solenoid"}));
  fractal->add_option("--level", level, "Finest level (number of bonds for the solenoid)")
      ->required();
  fractal->add_option("--base", base, "Solenoid base cycle length");
  fractal->add_option("--out", out_dir, "Write the tower into this directory");
  add_field(fractal);
  fractal->callback([&] {
    run = [&] {
      const std::map<std::string, nv_family> families = {
          {"cantor", NV_CANTOR}, {"carpet", NV_CARPET}, {"sponge", NV_SPONGE},
          {"solenoid", NV_SOLENOID}};
      nv_tower* t = nullptr;
      check(nv_tower_build(families.at(family), level, base, cap_from_env(), &t));
      TowerH owned(t);
      if (!out_dir.empty()) {
        check(nv_tower_write(t, out_dir.c_str()));
        for (const auto& e : std::filesystem::directory_iterator(out_dir)) {
          std::ifstream in(e.path(), std::ios::binary);
          std::ostringstream ss;
          ss << in.rdbuf();
          session.note_file(e.path().string(), sha256(ss.str()));
        }
      }
      char* text = nullptr;
      check(nv_tower_homology_json(t, parse_field(field_name), &text));
      session.print(take(text));
    };
  });

  // rips / cechball
  std::string eps_text;
  int maxdim = 3;
  auto add_sample_command = [&](const char* name, const char* help, bool rips) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("cloud", input, "CSV point cloud")->required();
    cmd->add_option("--eps", eps_text, "Scale, or 'auto' for the connectivity threshold")
        ->required();
    cmd->add_option("--maxdim", maxdim, "Largest simplex dimension")->check(CLI::NonNegativeNumber);
    cmd->add_option("--out", out_path, "Write the complex JSON here");
    add_field(cmd);
    cmd->callback([&, rips] {
      run = [&, rips] {
        nv_cloud* s = nullptr;
        check(nv_cloud_from_csv(session.read(input).c_str(), &s));
        Cloud owned(s);
        const double eps = parse_eps(eps_text, s);
        nv_complex* k = nullptr;
        check(rips ? nv_cloud_rips(s, eps, maxdim, &k) : nv_cloud_cech_ball(s, eps, maxdim, &k));
        Complex owned_k(k);
        write_complex(session, k, out_path);
        session.print(betti_report(k, parse_field(field_name)));
      };
    });
  };
  add_sample_command("rips", "Vietoris-Rips complex of a point cloud", true);
  add_sample_command("cechball", "Cech complex of closed balls around a point cloud", false);

  // rossler
  nv_ode_params ode;
  nv_ode_params_default(&ode);
  std::size_t count = 400;
  auto* rossler = app.add_subcommand("rossler", "Sampled Rossler trajectory as CSV");
  rossler->add_option("--a", ode.a);
  rossler->add_option("--b", ode.b);
  rossler->add_option("--c", ode.c);
  rossler->add_option("--dt", ode.step, "Step size");
  rossler->add_option("--steps", ode.total_steps, "Total integration steps");
  rossler->add_option("--transient", ode.transient_steps, "Leading steps discarded");
  rossler->add_option("--count", count, "Number of sampled points");
  rossler->add_option("--out", out_path, "Write the CSV here instead of standard output");
  rossler->callback([&] {
    run = [&] {
      nv_cloud* s = nullptr;
      check(nv_rossler(&ode, count, &s));
      Cloud owned(s);
      char* text = nullptr;
      check(nv_cloud_to_csv(s, &text));
      const std::string csv = take(text);
      if (out_path.empty()) {
        session.print(csv);
      } else {
        session.write(out_path, csv);
      }
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return NV_ERR_INPUT;
  }

  const auto started = std::chrono::steady_clock::now();
  try {
    run();
    if (!report_path.empty()) {
      auto r = session.report(std::vector<std::string>(argv + 1, argv + argc));
      if (timing) {
        r["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
                           .count();
      }
      std::ofstream out(report_path, std::ios::binary);
      out << r.dump() << "\n";
      if (!out) throw Exit{NV_ERR_INPUT, "cannot write '" + report_path + "'"};
    }
  } catch (const Exit& e) {
    std::cerr << "nervus: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "nervus: " << e.what() << "\n";
    return NV_ERR_INTERNAL;
  }
  return 0;
}
