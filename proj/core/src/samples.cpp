#include "orthokit/samples.hpp"

#include "orthokit/error.hpp"

namespace orthokit {

const std::vector<SampleDerivation>& sample_derivations() {
  static const std::vector<SampleDerivation> samples = {
      {"ql_a5", R"(system QL
0. p0 & p1 <=> p1 & p0 ; axiom A5
)", std::nullopt},
      {"ql_symmetry", R"(system QL
# from p0 <=> p1 conclude p1 <=> p0 by detaching A12 through A13 and A14
hyp p0 <=> p1
0. p0 <=> p1 ; hyp 0
1. (p0 <=> p1) <=> (p1 <=> p0) ; axiom A12
2. (p0 <=> p1) <=> (p1 <=> p0) =>0 ((p0 <=> p1) =>0 (p1 <=> p0)) ; axiom A13
3. ((p0 <=> p1) <=> (p1 <=> p0) =>0 ((p0 <=> p1) =>0 (p1 <=> p0))) =>3 (((p0 <=> p1) <=> (p1 <=> p0)) =>3 (((p0 <=> p1) <=> (p1 <=> p0)) =>3 ((p0 <=> p1) =>0 (p1 <=> p0)))) ; axiom A14
4. ((p0 <=> p1) <=> (p1 <=> p0)) =>3 (((p0 <=> p1) <=> (p1 <=> p0)) =>3 ((p0 <=> p1) =>0 (p1 <=> p0))) ; mp 2 3
5. ((p0 <=> p1) <=> (p1 <=> p0)) =>3 ((p0 <=> p1) =>0 (p1 <=> p0)) ; mp 1 4
6. (p0 <=> p1) =>0 (p1 <=> p0) ; mp 1 5
7. ((p0 <=> p1) =>0 (p1 <=> p0)) =>3 ((p0 <=> p1) =>3 ((p0 <=> p1) =>3 (p1 <=> p0))) ; axiom A14
8. (p0 <=> p1) =>3 ((p0 <=> p1) =>3 (p1 <=> p0)) ; mp 6 7
9. (p0 <=> p1) =>3 (p1 <=> p0) ; mp 0 8
10. p1 <=> p0 ; mp 0 9
)", std::nullopt},
      {"cl_hyp_or", R"(system CL
hyp p0
0. p0 ; hyp 0
1. p0 =>0 p0 V p1 ; axiom A2
2. p0 V p1 ; mp 0 1
)", std::nullopt},
      {"cl_excluded_middle", R"(system CL
# ~p0 V p0 via A2, A1 and A4 with C = ~p0
0. p0 =>0 p0 V p0 ; axiom A2
1. p0 V p0 =>0 p0 ; axiom A1
2. (p0 V p0 =>0 p0) =>0 (~p0 V (p0 V p0) =>0 ~p0 V p0) ; axiom A4
3. ~p0 V (p0 V p0) =>0 ~p0 V p0 ; mp 1 2
4. ~p0 V p0 ; mp 0 3
)", std::nullopt},
      {"cert_reflexive", R"(system QL
0. p0 <=> p0 ; axiom A1
)", std::nullopt},
      {"cert_a11", R"(system QL
0. p0 V (~p0 & (p0 V p1)) <=> p0 V p1 ; axiom A11
)", std::nullopt},
      {"ql_a5_bad_axiom", R"(system QL
0. p0 & p1 <=> p1 & p0 ; axiom A6
)", 0},
      {"ql_symmetry_bad_axiom", R"(system QL
# from p0 <=> p1 conclude p1 <=> p0 by detaching A12 through A13 and A14
hyp p0 <=> p1
0. p0 <=> p1 ; hyp 0
1. (p0 <=> p1) <=> (p1 <=> p0) ; axiom A13
2. (p0 <=> p1) <=> (p1 <=> p0) =>0 ((p0 <=> p1) =>0 (p1 <=> p0)) ; axiom A13
3. ((p0 <=> p1) <=> (p1 <=> p0) =>0 ((p0 <=> p1) =>0 (p1 <=> p0))) =>3 (((p0 <=> p1) <=> (p1 <=> p0)) =>3 (((p0 <=> p1) <=> (p1 <=> p0)) =>3 ((p0 <=> p1) =>0 (p1 <=> p0)))) ; axiom A14
4. ((p0 <=> p1) <=> (p1 <=> p0)) =>3 (((p0 <=> p1) <=> (p1 <=> p0)) =>3 ((p0 <=> p1) =>0 (p1 <=> p0))) ; mp 2 3
5. ((p0 <=> p1) <=> (p1 <=> p0)) =>3 ((p0 <=> p1) =>0 (p1 <=> p0)) ; mp 1 4
6. (p0 <=> p1) =>0 (p1 <=> p0) ; mp 1 5
7. ((p0 <=> p1) =>0 (p1 <=> p0)) =>3 ((p0 <=> p1) =>3 ((p0 <=> p1) =>3 (p1 <=> p0))) ; axiom A14
8. (p0 <=> p1) =>3 ((p0 <=> p1) =>3 (p1 <=> p0)) ; mp 6 7
9. (p0 <=> p1) =>3 (p1 <=> p0) ; mp 0 8
10. p1 <=> p0 ; mp 0 9
)", 1},
      {"ql_symmetry_bad_mp", R"(system QL
# from p0 <=> p1 conclude p1 <=> p0 by detaching A12 through A13 and A14
hyp p0 <=> p1
0. p0 <=> p1 ; hyp 0
1. (p0 <=> p1) <=> (p1 <=> p0) ; axiom A12
2. (p0 <=> p1) <=> (p1 <=> p0) =>0 ((p0 <=> p1) =>0 (p1 <=> p0)) ; axiom A13
3. ((p0 <=> p1) <=> (p1 <=> p0) =>0 ((p0 <=> p1) =>0 (p1 <=> p0))) =>3 (((p0 <=> p1) <=> (p1 <=> p0)) =>3 (((p0 <=> p1) <=> (p1 <=> p0)) =>3 ((p0 <=> p1) =>0 (p1 <=> p0)))) ; axiom A14
4. ((p0 <=> p1) <=> (p1 <=> p0)) =>3 (((p0 <=> p1) <=> (p1 <=> p0)) =>3 ((p0 <=> p1) =>0 (p1 <=> p0))) ; mp 2 3
5. ((p0 <=> p1) <=> (p1 <=> p0)) =>3 ((p0 <=> p1) =>0 (p1 <=> p0)) ; mp 1 4
6. (p0 <=> p1) =>0 (p1 <=> p0) ; mp 1 5
7. ((p0 <=> p1) =>0 (p1 <=> p0)) =>3 ((p0 <=> p1) =>3 ((p0 <=> p1) =>3 (p1 <=> p0))) ; axiom A14
8. (p0 <=> p1) =>3 ((p0 <=> p1) =>3 (p1 <=> p0)) ; mp 6 7
9. (p0 <=> p1) =>3 (p1 <=> p0) ; mp 0 7
10. p1 <=> p0 ; mp 0 9
)", 9},
      {"cl_hyp_or_bad_mp", R"(system CL
hyp p0
0. p0 ; hyp 0
1. p0 =>0 p0 V p1 ; axiom A2
2. p0 V p1 ; mp 0 5
)", 2},
      {"cl_excluded_middle_bad_axiom", R"(system CL
# ~p0 V p0 via A2, A1 and A4 with C = ~p0
0. p0 =>0 p0 V p0 ; axiom A2
1. p0 V p0 =>0 p0 ; axiom A3
2. (p0 V p0 =>0 p0) =>0 (~p0 V (p0 V p0) =>0 ~p0 V p0) ; axiom A4
3. ~p0 V (p0 V p0) =>0 ~p0 V p0 ; mp 1 2
4. ~p0 V p0 ; mp 0 3
)", 1},
      {"cl_excluded_middle_bad_mp", R"(system CL
# ~p0 V p0 via A2, A1 and A4 with C = ~p0
0. p0 =>0 p0 V p0 ; axiom A2
1. p0 V p0 =>0 p0 ; axiom A1
2. (p0 V p0 =>0 p0) =>0 (~p0 V (p0 V p0) =>0 ~p0 V p0) ; axiom A4
3. ~p0 V (p0 V p0) =>0 ~p0 V p0 ; mp 1 2
4. ~p0 V p0 ; mp 0 2
)", 4},
  };
  return samples;
}

const SampleDerivation& find_sample(std::string_view name) {
  for (const auto& s : sample_derivations())
    if (s.name == name) return s;
  throw UnknownName("unknown sample derivation '" + std::string(name) + "'");
}

}  // namespace orthokit
