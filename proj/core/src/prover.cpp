#include "dlseq/prover.hpp"

#include "dlseq/parser.hpp"

namespace dlseq {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::proved:
      return "proved";
    case Verdict::saturated:
      return "saturated";
    case Verdict::budget_exhausted:
      return "budget-exhausted";
  }
  return "?";
}

namespace {

class Search {
 public:
  Search(const Calculus& c, const Budget& budget) : c_(c), budget_(budget) {}

  ProofNode run(BranchState st, std::size_t cursor, std::size_t depth) {
    ++stats.branches;
    ProofNode root{st.top, {}, {}, {}};
    ProofNode* cur = &root;
    const auto& schemas = c_.schemas();
    while (true) {
      stats.max_branch_size = std::max(stats.max_branch_size, st.top.size());
      if (auto cl = find_closing(c_, st.top)) {
        cur->rule = cl->schema->name;
        cur->binding = cl->binding;
        return root;
      }
      if (st.top.size() > budget_.branch_formulas || depth >= budget_.depth ||
          stats.steps >= budget_.steps) {
        exhausted = true;
        return root;
      }
      std::optional<Application> app;
      for (std::size_t k = 0; k < schemas.size() && !app; ++k) {
        const RuleSchema& s = *schemas[(cursor + k) % schemas.size()];
        ++stats.scheduled[s.name];
        auto apps = enumerate_applications(c_, st, s, 1);
        if (!apps.empty()) {
          app = std::move(apps.front());
          cursor = (cursor + k + 1) % schemas.size();
        }
      }
      if (!app) {
        open = st;
        return root;
      }
      ++stats.steps;
      cur->rule = app->schema->name;
      cur->binding = app->binding;
      st.marks.insert(app->mark);
      if (app->premises.empty()) return root;
      if (app->premises.size() == 1) {
        cur->children.push_back(ProofNode{app->premises.front(), {}, {}, {}});
        cur = &cur->children.front();
        st.advance(std::move(app->premises.front()));
        ++depth;
        continue;
      }
      for (std::size_t i = 0; i < app->premises.size(); ++i) {
        if (open || exhausted) {
          cur->children.push_back(ProofNode{app->premises[i], {}, {}, {}});
          continue;
        }
        BranchState child = st;
        child.advance(app->premises[i]);
        cur->children.push_back(run(std::move(child), cursor, depth + 1));
      }
      return root;
    }
  }

  SearchStats stats;
  std::optional<BranchState> open;
  bool exhausted = false;

 private:
  const Calculus& c_;
  Budget budget_;
};

}  // namespace

SearchOutcome prove(const Sequent& root, const Calculus& c, const Budget& budget) {
  check_profile(root, c.profile(), c.definitions());
  Search search(c, budget);
  SearchOutcome out;
  out.tree = search.run(BranchState(root), 0, 0);
  out.stats = search.stats;
  if (search.open) {
    out.verdict = Verdict::saturated;
    out.branch = std::move(search.open);
  } else if (search.exhausted) {
    out.verdict = Verdict::budget_exhausted;
  } else {
    out.verdict = Verdict::proved;
  }
  return out;
}

bool is_saturated(const BranchState& b, const Calculus& c) {
  if (find_closing(c, b.top)) return false;
  for (const auto& s : c.schemas())
    if (!enumerate_applications(c, b, *s, 1).empty()) return false;
  return true;
}

}  // namespace dlseq
