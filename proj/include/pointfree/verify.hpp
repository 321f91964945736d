#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pointfree/corpus.hpp"

namespace pointfree {

// One verifier outcome. `anchor` names the statement the check verifies.
struct CheckRecord {
  std::string name;
  std::string anchor;
  bool pass = false;
  std::string witness;  // failure witness or summary counts
};

struct Report {
  std::string command;
  uint64_t seed = 0;
  int max_size = 0;
  std::vector<CheckRecord> records;
  std::optional<double> timing_ms;

  bool all_pass() const {
    for (const auto& r : records)
      if (!r.pass) return false;
    return true;
  }
};

// Individual theorem verifiers over a corpus. Each runs the full sweep and
// reports the first witness on failure.
CheckRecord verify_frame_laws(const Corpus& c);
CheckRecord verify_point_triple(const Corpus& c);
CheckRecord verify_chain_closure_law(const Corpus& c, uint64_t seed, int random_bases);
CheckRecord verify_canonical_decomposition(const Corpus& c);
CheckRecord verify_tree_base_loop(const Corpus& c);
CheckRecord verify_branch_induction(const Corpus& c, int max_tree_nodes, bool all_nuclei);
CheckRecord verify_cb_ranks();
CheckRecord verify_quotients(const Corpus& c, int carrier_bound);
CheckRecord verify_padic_trichotomy();
CheckRecord verify_padic_relations();
CheckRecord verify_padic_roundtrip();
CheckRecord verify_zero_dim_counterexample();
CheckRecord verify_spatial_point_tree(const Corpus& c);
CheckRecord verify_complemented_lemma(const Corpus& c);
CheckRecord verify_ortho_classification(const Corpus& c);
CheckRecord verify_separation_implications(const Corpus& c);
CheckRecord verify_assembly_laws(const Corpus& c);
CheckRecord verify_coverage_rules(const Corpus& c);
CheckRecord verify_operator_chain(const Corpus& c);
CheckRecord verify_branch_points(const Corpus& c);
CheckRecord verify_level_decomposition(const Corpus& c);

// The full regression suite in corpus order.
Report run_verify_paper(const CorpusOptions& opt);

}  // namespace pointfree
