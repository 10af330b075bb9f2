// Copyright 2026 The kbmatrix Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kbmatrix/cli.h"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "kbmatrix/parser.h"
#include "kbmatrix/server.h"
#include "kbmatrix/session.h"

namespace kbmatrix {

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kLoadFailure = 2;

std::optional<std::string> ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<NodeId> ToNodeIds(const std::vector<std::string> &ids) {
  std::vector<NodeId> out;
  for (const std::string &id : ids) {
    if (!IsIdentifier(id)) throw Error("UnknownRoot", "invalid id '" + id + "'");
    out.emplace_back(id);
  }
  return out;
}

int RunParse(const std::string &text, bool check, std::ostream &out,
             std::ostream &err) {
  KnowledgeBase kb = ParseKb(text);
  bool failed = false;
  for (const Diagnostic &d : Validate(kb)) {
    if (auto loc = kb.location(d.fact_index)) {
      err << loc->line << ":" << loc->column << ": ";
    }
    if (d.severity == Severity::kError) {
      failed = true;
    } else {
      err << "warning: ";
    }
    err << d.message << "\n";
  }
  if (failed) return kLoadFailure;
  if (!check) out << SerializeKb(kb);
  return kOk;
}

MatrixView ExpandEverywhere(MatrixView view, const OccurrenceId &occ) {
  bool any = false;
  for (Axis axis : {Axis::kRows, Axis::kCols}) {
    if (!IsVisible(*view.model, view.axis(axis), occ)) continue;
    view = Expand(view, axis, occ);
    any = true;
  }
  if (!any) throw Error("NotVisible", "'" + occ + "' is not visible");
  return view;
}

}  // namespace

int RunCli(const std::vector<std::string> &args, std::ostream &out,
           std::ostream &err) {
  CLI::App app{"Explore knowledge bases as an adjacency matrix", "kbmatrix"};
  app.require_subcommand(1);

  std::string file;
  bool check = false;
  std::string format;
  std::vector<std::string> rows, cols, expand;
  ServeOptions serve_options;
  std::string static_dir;

  CLI::App *parse = app.add_subcommand("parse", "Check or canonicalize a KB");
  parse->add_option("file", file, "Knowledge base file")->required();
  parse->add_flag("--check", check, "Only validate, print nothing");

  CLI::App *forest = app.add_subcommand("forest", "Print the hierarchies");
  forest->add_option("file", file, "Knowledge base file")->required();
  forest->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  CLI::App *view = app.add_subcommand("view", "Print a matrix snapshot");
  view->add_option("file", file, "Knowledge base file")->required();
  view->add_option("--rows", rows, "Row roots")->delimiter(',');
  view->add_option("--cols", cols, "Column roots")->delimiter(',');
  view->add_option("--expand", expand, "Occurrences to expand")
      ->delimiter(',');
  view->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  CLI::App *serve = app.add_subcommand("serve", "Run the HTTP service");
  serve->add_option("file", file, "Knowledge base to preload");
  serve->add_option("--port", serve_options.port, "TCP port")
      ->check(CLI::Range(1, 65535));
  serve->add_option("--addr", serve_options.address, "Bind address");
  serve->add_option("--static", static_dir, "Frontend asset directory");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();  // program name
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::optional<std::string> text;
  if (!file.empty()) {
    text = ReadFile(file);
    if (!text) {
      err << "cannot read " << file << "\n";
      return kUsage;
    }
  }

  try {
    if (parse->parsed()) return RunParse(*text, check, out, err);

    if (forest->parsed()) {
      std::shared_ptr<const ViewModel> model = LoadModel(*text);
      if (format == "json") {
        out << ForestToJson(model->forest) << "\n";
      } else {
        out << ForestToText(model->forest);
      }
      return kOk;
    }

    if (view->parsed()) {
      std::shared_ptr<const ViewModel> model = LoadModel(*text);
      try {
        MatrixView v = NewView(model, ToNodeIds(rows), ToNodeIds(cols));
        for (const std::string &occ : expand) v = ExpandEverywhere(v, occ);
        Snapshot snap = MakeSnapshot(v, 0);
        if (format == "text") {
          out << RenderSnapshotText(snap);
        } else {
          out << EncodeSnapshot(snap) << "\n";
        }
      } catch (const Error &e) {
        err << e.code() << ": " << e.what() << "\n";
        return kUsage;
      }
      return kOk;
    }

    if (serve->parsed()) {
      SessionStore store;
      if (text) {
        serve_options.preloaded_session = store.Create(*text).session_id;
      }
      if (!static_dir.empty()) serve_options.static_dir = static_dir;
      out << "listening on http://" << serve_options.address << ":"
          << serve_options.port << "\n";
      if (serve_options.preloaded_session) {
        out << "preloaded session " << *serve_options.preloaded_session
            << "\n";
      }
      out.flush();
      if (!Serve(store, serve_options)) {
        err << "cannot bind " << serve_options.address << ":"
            << serve_options.port << "\n";
        return kUsage;
      }
      return kOk;
    }
  } catch (const ParseError &e) {
    err << e.Located() << "\n";
    return kLoadFailure;
  } catch (const Error &e) {
    err << e.what() << "\n";
    return kLoadFailure;
  }
  return kUsage;
}

}  // namespace kbmatrix
