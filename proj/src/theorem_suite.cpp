#include "ringlab/theorem_suite.hpp"

#include "ringlab/constructors.hpp"
#include "ringlab/error.hpp"
#include "suite_internal.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace ringlab {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::NotApplicable: return "not-applicable";
    case Verdict::Skipped: return "skipped";
  }
  return "?";
}

bool SuiteReport::any_fail() const {
  return std::any_of(theorems.begin(), theorems.end(),
                     [](const TheoremReport& t) { return t.aggregate == Verdict::Fail; });
}

// ---- analysis cache ---------------------------------------------------------

std::shared_ptr<const RingAnalysis> AnalysisCache::get_or_compute(
    const std::string& key, const std::function<RingHandle()>& make) {
  std::promise<std::shared_ptr<const RingAnalysis>> promise;
  {
    std::unique_lock lock(mu_);
    if (auto it = slots_.find(key); it != slots_.end()) {
      Slot slot = it->second;
      lock.unlock();
      return slot.get();
    }
    slots_.emplace(key, promise.get_future().share());
  }
  try {
    auto result = std::make_shared<const RingAnalysis>(RingAnalysis::analyze(make(), opts_));
    promise.set_value(result);
    return result;
  } catch (...) {
    promise.set_exception(std::current_exception());
    throw;
  }
}

std::shared_ptr<const RingAnalysis> AnalysisCache::get(const RingHandle& ring) {
  return get_or_compute(canonical(ring->spec()), [&] { return ring; });
}

std::shared_ptr<const RingAnalysis> AnalysisCache::get(const SpecPtr& spec) {
  return get_or_compute(canonical(*spec), [&] { return build(spec, build_); });
}

std::shared_ptr<const RingAnalysis> AnalysisCache::radical_quotient(const RingAnalysis& a) {
  const auto& q = a.radical_quotient.ring;
  return get_or_compute(canonical(q->spec()), [&] { return q; });
}

// ---- row helpers ------------------------------------------------------------

namespace suite {

std::string yes_no(bool b) { return b ? "true" : "false"; }

void Legs::expect(bool holds, const std::string& leg, Json witness) {
  exercised_.push_back(leg);
  if (!holds && !failed_) {
    failed_ = leg;
    witness_ = std::move(witness);
  }
}

void Legs::gated(const std::string& leg, const std::string& why) {
  gated_.push_back(leg + " (" + why + ")");
}

RingVerdict Legs::finish() const {
  RingVerdict v;
  v.ring = ring_;
  std::string detail;
  auto append = [&](const std::string& head, const std::vector<std::string>& items) {
    if (items.empty()) return;
    if (!detail.empty()) detail += " | ";
    detail += head;
    for (std::size_t i = 0; i < items.size(); ++i) detail += (i ? "; " : "") + items[i];
  };
  if (failed_) {
    v.verdict = Verdict::Fail;
    detail = "failed: " + *failed_;
    v.witness = witness_;
  } else {
    v.verdict = exercised_.empty() ? Verdict::NotApplicable : Verdict::Pass;
    append("checked: ", exercised_);
  }
  append("not asserted: ", gated_);
  append("", notes_);
  v.detail = detail;
  return v;
}

RingVerdict skipped_row(std::string ring, std::string why) {
  return {std::move(ring), Verdict::Skipped, std::move(why), nullptr};
}

RingVerdict na_row(std::string ring, std::string why) {
  return {std::move(ring), Verdict::NotApplicable, std::move(why), nullptr};
}

}  // namespace suite

// ---- registry and runner ----------------------------------------------------

const std::vector<TheoremInfo>& theorem_registry() {
  static const std::vector<TheoremInfo> infos = [] {
    std::vector<TheoremInfo> out;
    for (const auto& c : suite::checks()) out.push_back({c.id, c.title});
    return out;
  }();
  return infos;
}

bool is_known_theorem(const std::string& id) {
  const auto& reg = theorem_registry();
  return std::any_of(reg.begin(), reg.end(), [&](const TheoremInfo& t) { return t.id == id; });
}

namespace {

std::vector<RingVerdict> execute(const suite::Task& task) {
  try {
    return task.run();
  } catch (const SizeExceeded& e) {
    return {suite::skipped_row(task.ring, std::string("size exceeded: ") + e.what())};
  } catch (const LatticeLimitExceeded& e) {
    return {suite::skipped_row(task.ring, e.what())};
  } catch (const std::exception& e) {
    return {{task.ring, Verdict::Fail, std::string("error: ") + e.what(), nullptr}};
  }
}

Verdict aggregate(const std::vector<RingVerdict>& rows) {
  auto has = [&](Verdict v) {
    return std::any_of(rows.begin(), rows.end(), [v](const RingVerdict& r) { return r.verdict == v; });
  };
  if (has(Verdict::Fail)) return Verdict::Fail;
  if (has(Verdict::Pass)) return Verdict::Pass;
  if (has(Verdict::Skipped)) return Verdict::Skipped;
  return Verdict::NotApplicable;
}

}  // namespace

SuiteReport run_suite(const Catalog& catalog, const std::vector<std::string>& ids,
                      const SuiteOptions& opts) {
  for (const auto& id : ids)
    if (!is_known_theorem(id)) throw Error("unknown theorem id: " + id);

  suite::Context ctx(catalog, opts);
  std::vector<const suite::Check*> selected;
  for (const auto& c : suite::checks())
    if (ids.empty() || std::find(ids.begin(), ids.end(), c.id) != ids.end())
      selected.push_back(&c);

  std::vector<suite::Plan> plans(selected.size());
  for (std::size_t i = 0; i < selected.size(); ++i) selected[i]->plan(ctx, plans[i]);

  std::vector<const suite::Task*> tasks;
  std::vector<std::size_t> offsets;
  for (const auto& p : plans) {
    offsets.push_back(tasks.size());
    for (const auto& t : p.tasks) tasks.push_back(&t);
  }

  std::vector<std::vector<RingVerdict>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) results[i] = execute(*tasks[i]);
  };
  const unsigned jobs = opts.jobs ? opts.jobs : std::max(1u, std::thread::hardware_concurrency());
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  SuiteReport report;
  for (std::size_t i = 0; i < selected.size(); ++i) {
    TheoremReport t;
    t.id = selected[i]->id;
    t.title = selected[i]->title;
    t.notes = plans[i].notes;
    for (std::size_t k = 0; k < plans[i].tasks.size(); ++k)
      for (auto& row : results[offsets[i] + k]) t.rows.push_back(std::move(row));
    t.aggregate = aggregate(t.rows);
    report.theorems.push_back(std::move(t));
  }
  return report;
}

// ---- output -----------------------------------------------------------------

Json to_json(const SuiteReport& report) {
  Json theorems = Json::array();
  std::map<std::string, std::size_t> counts;
  for (const auto& t : report.theorems) {
    Json rows = Json::array();
    for (const auto& r : t.rows) {
      Json row = {{"ring", r.ring}, {"verdict", to_string(r.verdict)}, {"detail", r.detail}};
      if (!r.witness.is_null()) row["witness"] = r.witness;
      rows.push_back(std::move(row));
    }
    ++counts[to_string(t.aggregate)];
    theorems.push_back({{"id", t.id},
                        {"title", t.title},
                        {"aggregate", to_string(t.aggregate)},
                        {"notes", t.notes},
                        {"rows", std::move(rows)}});
  }
  Json summary = Json::object();
  for (Verdict v : {Verdict::Pass, Verdict::Fail, Verdict::NotApplicable, Verdict::Skipped})
    summary[to_string(v)] = counts[to_string(v)];
  return {{"theorems", std::move(theorems)}, {"summary", std::move(summary)},
          {"all_pass", !report.any_fail()}};
}

std::string to_table(const SuiteReport& report) {
  std::size_t w_id = 7, w_ring = 4;
  for (const auto& t : report.theorems) {
    w_id = std::max(w_id, t.id.size());
    for (const auto& r : t.rows) w_ring = std::max(w_ring, r.ring.size());
  }
  std::ostringstream out;
  auto line = [&](const std::string& a, const std::string& b, const std::string& c,
                  const std::string& d) {
    out << a << std::string(w_id - a.size() + 2, ' ') << b << std::string(w_ring - b.size() + 2, ' ')
        << c << std::string(16 - std::min<std::size_t>(c.size(), 14), ' ') << d << '\n';
  };
  line("theorem", "ring", "verdict", "detail");
  for (const auto& t : report.theorems) {
    for (const auto& r : t.rows) {
      line(t.id, r.ring, to_string(r.verdict), r.detail);
      if (!r.witness.is_null()) line("", "", "", "witness: " + r.witness.dump());
    }
  }
  out << '\n';
  for (const auto& t : report.theorems) {
    out << t.id << std::string(w_id - t.id.size() + 2, ' ') << to_string(t.aggregate) << "  "
        << t.title << '\n';
    for (const auto& n : t.notes) out << std::string(w_id + 2, ' ') << "note: " << n << '\n';
  }
  return out.str();
}

}  // namespace ringlab
