// Copyright 2026 The stci Authors
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

#include "stci/cli/report.hpp"

#include <functional>

#include <json.hpp>

#include "stci/ideal/deadline.hpp"

namespace stci::cli {

using json = nlohmann::ordered_json;

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "true";
    case Verdict::fails:
      return "false";
    case Verdict::undecided:
      return "undecided";
    case Verdict::not_applicable:
      return "not_applicable";
    case Verdict::skipped:
      return "skipped";
  }
  return "?";
}

const Entry* CheckReport::find(const std::string& name) const {
  for (const auto& [key, e] : verdicts)
    if (key == name) return &e;
  return nullptr;
}

namespace {

ComponentSummary summarize(const CurveSpec& curve, const Polynomial& f) {
  ComponentSummary s;
  for (const auto& c : decompose_bihomogeneous(curve, f).components) s.bidegrees.push_back(c.degree);
  s.count = s.bidegrees.size();
  return s;
}

class Runner {
 public:
  Runner(const CheckOptions& o, CheckReport& r) : opts_(o), report_(r) {}

  bool wanted(const std::string& group) const { return opts_.only.empty() || opts_.only.count(group) > 0; }

  // Runs `body` for the entries named in `names`; body fills them in.
  void run(const std::string& group, const std::vector<std::string>& names,
           const std::function<void(std::vector<Entry*>&)>& body) {
    std::vector<Entry*> slots;
    for (const auto& n : names) report_.verdicts.emplace_back(n, Entry{});
    for (std::size_t k = 0; k < names.size(); ++k)
      slots.push_back(&report_.verdicts[report_.verdicts.size() - names.size() + k].second);
    if (!wanted(group)) return;
    const auto start = std::chrono::steady_clock::now();
    try {
      DeadlineScope scope(opts_.timeout);
      body(slots);
    } catch (const Timeout&) {
      for (Entry* e : slots) {
        *e = Entry{};
        e->verdict = Verdict::undecided;
        e->note = "timed out after " + std::to_string(opts_.timeout ? opts_.timeout->count() : 0) + " s";
      }
    }
    if (opts_.timings) {
      const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
      for (Entry* e : slots) e->seconds = took.count();
    }
  }

 private:
  const CheckOptions& opts_;
  CheckReport& report_;
};

void fill_side(Entry& a, Entry& b, const SideCheck& s) {
  a.verdict = verdict_of(s.theorem1a());
  a.details = {{"non_unit", s.non_unit}, {"in_radical_of_extremal", s.in_radical_of_extremal}};
  b.verdict = verdict_of(s.theorem1b());
  b.details = {{"in_p", s.in_p}, {"vanishes_on_curve", s.vanishes_on_curve}};
}

}  // namespace

CheckReport run_check(const CandidatePair& pair, const CheckOptions& options) {
  CheckReport r;
  r.curve = pair.curve.str();
  r.field = pair.curve.field.name();
  r.strictness = strictness_name(options.strictness);
  r.d1 = pair.d1;
  r.d2 = pair.d2;
  r.f = pair.f.str();
  r.g = pair.g.str();
  r.f_components = summarize(pair.curve, pair.f);
  r.g_components = summarize(pair.curve, pair.g);
  const CommonDivisors t = compute_t(pair);
  r.t_min = t.t_min.str();
  r.t_max = t.t_max.str();
  r.t_min_is_unit = t.t_min.is_constant();
  r.t_max_is_unit = t.t_max.is_constant();
  r.char_p_caveat = pair.curve.field.characteristic() != 0;
  r.verdicts.reserve(32);

  Runner run(options, r);
  run.run("in_p", {"in_p_f", "in_p_g"}, [&](std::vector<Entry*>& e) {
    const Ideal p = curve_ideal(pair.curve);
    const bool f_in = in_ideal(pair.f, p), g_in = in_ideal(pair.g, p);
    e[0]->verdict = verdict_of(f_in);
    e[1]->verdict = verdict_of(g_in);
  });
  run.run("is_stci", {"is_stci"}, [&](std::vector<Entry*>& e) { e[0]->verdict = verdict_of(is_stci(pair)); });
  run.run("theorem1", {"theorem1a_min", "theorem1a_max", "theorem1b_min", "theorem1b_max"},
          [&](std::vector<Entry*>& e) {
            const Theorem1Check c = check_theorem1(pair);
            fill_side(*e[0], *e[2], c.min);
            fill_side(*e[1], *e[3], c.max);
          });
  for (Identity which : {Identity::mpd1, Identity::mpd3, Identity::mpd4, Identity::mpd5}) {
    const std::string name = identity_name(which);
    run.run(name, {name}, [&](std::vector<Entry*>& e) {
      Entry& out = *e[0];
      out.strictness = strictness_name(options.strictness);
      try {
        const IdentityCheck c = verify_identity(pair, which, options.strictness);
        out.verdict = verdict_of(c.holds());
        out.details.emplace_back("containment", c.containment);
        if (c.reverse) out.details.emplace_back("reverse", *c.reverse);
        for (const auto& f : c.factors) out.factors.push_back({f.factor, f.f_in, f.g_in});
        if (c.reverse_failure) out.note = "not in the left-hand radical: " + *c.reverse_failure;
      } catch (const PairNotInCurveIdeal& err) {
        out.verdict = Verdict::not_applicable;
        out.note = err.what();
      }
    });
  }
  run.run("radical_remark", {"radical_remark"}, [&](std::vector<Entry*>& e) {
    const RadicalRemark rr = verify_radical_remark(pair);
    e[0]->verdict = verdict_of(rr.holds());
    e[0]->details = {{"lambda_t_max", rr.lambda_t_max}, {"mu_t_min", rr.mu_t_min}};
  });
  run.run("saturation_probe", {"saturation_probe"}, [&](std::vector<Entry*>& e) {
    const SaturationProbe sp = saturation_probe(pair);
    e[0]->verdict = verdict_of(sp.holds());
    e[0]->details = {{"saturation_in_p", sp.saturation_in_p}, {"p_in_saturation", sp.p_in_saturation}};
    for (const auto& h : sp.saturation) e[0]->generators.push_back(h.str());
    e[0]->note = sp.failure;
  });
  run.run("component_conditions", {"component_conditions"}, [&](std::vector<Entry*>& e) {
    const ComponentConditions c = check_component_conditions(pair);
    e[0]->verdict = verdict_of(c.neither_bihomogeneous);
    e[0]->details = {{"neither_bihomogeneous", c.neither_bihomogeneous},
                     {"three_for_one", c.three_for_one},
                     {"three_for_each", c.three_for_each}};
  });
  return r;
}

int exit_code(const CheckReport& report) {
  bool failed = false, undecided = false;
  for (const auto& [name, e] : report.verdicts) {
    failed = failed || e.verdict == Verdict::fails;
    undecided = undecided || e.verdict == Verdict::undecided;
  }
  if (undecided) return 3;
  return failed ? 1 : 0;
}

namespace {

json verdict_json(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return true;
    case Verdict::fails:
      return false;
    default:
      return verdict_name(v);
  }
}

Verdict verdict_from(const json& j) {
  if (j.is_boolean()) return verdict_of(j.get<bool>());
  const std::string s = j.get<std::string>();
  for (Verdict v : {Verdict::undecided, Verdict::not_applicable, Verdict::skipped})
    if (verdict_name(v) == s) return v;
  throw InvalidArgument("unknown verdict '" + s + "'");
}

json components_json(const ComponentSummary& c) {
  json bid = json::array();
  for (const auto& b : c.bidegrees) bid.push_back(json::array({b.i, b.j}));
  return json{{"count", c.count}, {"bidegrees", bid}};
}

ComponentSummary components_from(const json& j) {
  ComponentSummary c;
  c.count = j.at("count").get<std::size_t>();
  for (const auto& b : j.at("bidegrees")) c.bidegrees.push_back({b.at(0).get<std::uint32_t>(), b.at(1).get<std::uint32_t>()});
  return c;
}

json entry_json(const Entry& e) {
  json j;
  j["verdict"] = verdict_json(e.verdict);
  j["strictness"] = e.strictness;
  if (!e.details.empty()) {
    json d = json::object();
    for (const auto& [k, v] : e.details) d[k] = v;
    j["details"] = d;
  }
  if (!e.factors.empty()) {
    json fs = json::array();
    for (const auto& f : e.factors) fs.push_back(json{{"factor", f.factor}, {"f_in", f.f_in}, {"g_in", f.g_in}});
    j["factors"] = fs;
  }
  if (!e.generators.empty()) j["generators"] = e.generators;
  if (e.note) j["note"] = *e.note;
  if (e.seconds) j["seconds"] = *e.seconds;
  return j;
}

Entry entry_from(const json& j) {
  Entry e;
  e.verdict = verdict_from(j.at("verdict"));
  e.strictness = j.at("strictness").get<std::string>();
  if (j.contains("details"))
    for (const auto& [k, v] : j.at("details").items()) e.details.emplace_back(k, v.get<bool>());
  if (j.contains("factors"))
    for (const auto& f : j.at("factors"))
      e.factors.push_back({f.at("factor").get<std::string>(), f.at("f_in").get<bool>(), f.at("g_in").get<bool>()});
  if (j.contains("generators")) e.generators = j.at("generators").get<std::vector<std::string>>();
  if (j.contains("note")) e.note = j.at("note").get<std::string>();
  if (j.contains("seconds")) e.seconds = j.at("seconds").get<double>();
  return e;
}

}  // namespace

std::string serialize_report(const CheckReport& r) {
  json j;
  j["curve"] = r.curve;
  j["field"] = r.field;
  j["strictness"] = r.strictness;
  j["d1"] = r.d1;
  j["d2"] = r.d2;
  j["f"] = r.f;
  j["g"] = r.g;
  j["components"] = json{{"f", components_json(r.f_components)}, {"g", components_json(r.g_components)}};
  j["t_min"] = r.t_min;
  j["t_min_is_unit"] = r.t_min_is_unit;
  j["t_max"] = r.t_max;
  j["t_max_is_unit"] = r.t_max_is_unit;
  j["char_p_caveat"] = r.char_p_caveat;
  json v = json::object();
  for (const auto& [name, e] : r.verdicts) v[name] = entry_json(e);
  j["verdicts"] = v;
  return j.dump(2) + "\n";
}

CheckReport read_report(const std::string& text) {
  try {
    const json j = json::parse(text);
    CheckReport r;
    r.curve = j.at("curve").get<std::string>();
    r.field = j.at("field").get<std::string>();
    r.strictness = j.at("strictness").get<std::string>();
    r.d1 = j.at("d1").get<std::uint32_t>();
    r.d2 = j.at("d2").get<std::uint32_t>();
    r.f = j.at("f").get<std::string>();
    r.g = j.at("g").get<std::string>();
    r.f_components = components_from(j.at("components").at("f"));
    r.g_components = components_from(j.at("components").at("g"));
    r.t_min = j.at("t_min").get<std::string>();
    r.t_min_is_unit = j.at("t_min_is_unit").get<bool>();
    r.t_max = j.at("t_max").get<std::string>();
    r.t_max_is_unit = j.at("t_max_is_unit").get<bool>();
    r.char_p_caveat = j.at("char_p_caveat").get<bool>();
    for (const auto& [name, e] : j.at("verdicts").items()) r.verdicts.emplace_back(name, entry_from(e));
    return r;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed report: ") + e.what());
  }
}

}  // namespace stci::cli
