// Copyright 2026 The hyperell Authors
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

#ifndef HYPERELL_TOOLS_CLI_HPP_
#define HYPERELL_TOOLS_CLI_HPP_

#include <exception>
#include <functional>
#include <ostream>
#include <string>

#include "CLI11.hpp"

#include "hyperell/report.hpp"

namespace hyperell::cli {

/// Runs one invocation of the `hyperell` tool. Returns the exit status.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of complete linear series on hyperelliptic curves"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  app.add_flag("--json", json, "Emit one JSON record instead of text");

  Int g = 0, m = 0, b = 0, d = 0, d_min = 0, d_max = 0, nu = 0, p = 0, j_max = 7;
  std::function<report::Record()> command;
  std::string name;

  auto add_type = [&](CLI::App* sub) {
    sub->add_option("--g", g, "Arithmetic genus")->required();
    sub->add_option("--m", m, "Multiplicity m")->required();
    sub->add_option("--b", b, "Normalized degree b")->required();
  };

  auto* classify = app.add_subcommand("classify", "Riemann-Roch, ampleness, morphism and scroll model");
  add_type(classify);
  classify->callback([&] { command = [&] { return report::classify(FactorizationType(g, m, b)); }; });

  auto* betti = app.add_subcommand("betti", "Graded Betti diagram of the embedded curve");
  add_type(betti);
  betti->callback([&] { command = [&] { return report::betti(FactorizationType(g, m, b)); }; });

  auto* rao = app.add_subcommand("rao", "Hartshorne-Rao dimensions and regularity (d <= 2g)");
  add_type(rao);
  rao->add_option("--j-max", j_max, "Largest j to report")->capture_default_str();
  rao->callback([&] { command = [&] { return report::rao(FactorizationType(g, m, b), j_max); }; });

  auto* enumerate = app.add_subcommand("enumerate", "Very ample factorization types of degree d");
  enumerate->add_option("--g", g, "Arithmetic genus")->required();
  enumerate->add_option("--d", d, "Degree")->required();
  enumerate->callback([&] { command = [&] { return report::enumerate(g, d); }; });

  auto* table = app.add_subcommand("table", "Invariant table for g+3 <= d_min <= d <= d_max <= 2g");
  table->add_option("--g", g, "Arithmetic genus")->required();
  table->add_option("--d-min", d_min, "Smallest degree")->required();
  table->add_option("--d-max", d_max, "Largest degree")->required();
  table->add_option("--j-max", j_max, "Largest gamma column")->capture_default_str();
  table->callback([&] { command = [&] { return report::table(g, d_min, d_max, j_max); }; });

  auto* invert = app.add_subcommand("invert", "Recover (m,b) from d, nu and p");
  invert->add_option("--g", g, "Arithmetic genus")->required();
  invert->add_option("--d", d, "Degree")->required();
  invert->add_option("--nu", nu, "Regularity index nu")->required();
  invert->add_option("--p", p, "N_{nu,p} index")->required();
  invert->callback([&] { command = [&] { return report::invert(g, d, nu, p); }; });

  auto* obstruction = app.add_subcommand("obstruction", "Secant-plane obstruction to N_{p+1} (d >= 2g+1)");
  add_type(obstruction);
  obstruction->callback([&] { command = [&] { return report::obstruction(FactorizationType(g, m, b)); }; });


  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  name = app.get_subcommands().front()->get_name();
  try {
    const report::Record rec = command();
    out << (json ? rec.dump(2) + "\n" : report::render_text(rec));
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    if (json) out << report::Record{{"command", name}, {"error", e.what()}}.dump(2) << "\n";
    return 1;
  }
}

}  // namespace hyperell::cli

#endif  // HYPERELL_TOOLS_CLI_HPP_
