#include <doctest.h>

#include <algorithm>

#include "probarg/errors.hpp"
#include "probarg/labelling.hpp"
#include "probarg/sampling.hpp"
#include "test_util.hpp"

using namespace probarg;

namespace {

Labelling lab(std::vector<Label> l) { return Labelling(std::move(l)); }

constexpr Label I = Label::In, O = Label::Out, U = Label::Undec;

} // namespace

TEST_CASE("labelling basics") {
    Labelling l = lab({I, O, U, U, O, I});
    CHECK(l.size() == 6);
    CHECK(l[0] == I);
    CHECK(l.in_set() == std::vector<int>{0, 5});
    CHECK(l.out_set() == std::vector<int>{1, 4});
    CHECK(l.undec_set() == std::vector<int>{2, 3});
    CHECK(l == lab({I, O, U, U, O, I}));
    CHECK_FALSE(l == lab({I, O, U, U, O, U}));

    // lexicographic order with in < out < undec per position
    CHECK(lab({I, U}) < lab({O, I}));
    CHECK(lab({I, I}) < lab({I, U}));
    CHECK_FALSE(lab({U, I}) < lab({I, U}));

    Labelling all_undec(3, U);
    CHECK(all_undec.undec_set() == std::vector<int>{0, 1, 2});
}

TEST_CASE("legality predicates") {
    ArgumentationFramework af = tu::six_arg_example();

    Labelling grounded = lab({U, U, U, U, O, I});
    Labelling left = lab({I, O, I, O, O, I});
    Labelling right = lab({O, I, O, I, O, I});
    Labelling broken = lab({I, I, U, U, O, I});   // a1 and a2 both in

    CHECK(is_conflict_free(af, grounded));
    CHECK(is_conflict_free(af, left));
    CHECK_FALSE(is_conflict_free(af, broken));

    CHECK(is_admissible(af, grounded));
    CHECK(is_admissible(af, left));
    CHECK(is_admissible(af, Labelling(6, U)));
    // in without defense: a3 in but its attacker a2 is undec
    CHECK_FALSE(is_admissible(af, lab({U, U, I, O, O, I})));
    // out without reason
    CHECK_FALSE(is_admissible(af, lab({O, U, U, U, O, I})));

    CHECK(is_complete(af, grounded));
    CHECK(is_complete(af, left));
    CHECK(is_complete(af, right));
    // admissible but not complete: a6 undec though unattacked
    CHECK(is_admissible(af, Labelling(6, U)));
    CHECK_FALSE(is_complete(af, Labelling(6, U)));

    // the library predicate agrees with the definition on every labelling
    tu::each_labelling(af.size(), [&](const Labelling& l) {
        CHECK(is_complete(af, l) == tu::oracle_is_complete(af, l));
    });
}

TEST_CASE("complete labellings of the running example") {
    ArgumentationFramework af = tu::six_arg_example();
    auto all = enumerate_complete(af);
    REQUIRE(all.size() == 3);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(all == tu::oracle_complete_labellings(af));

    Labelling grounded = lab({U, U, U, U, O, I});
    CHECK(grounded_fixpoint(af) == grounded);

    CHECK(select(af, Semantics::Grounded) == std::vector<Labelling>{grounded});
    CHECK(select(af, Semantics::Complete) == all);

    auto stable = select(af, Semantics::Stable);
    REQUIRE(stable.size() == 2);
    CHECK(stable[0] == lab({I, O, I, O, O, I}));
    CHECK(stable[1] == lab({O, I, O, I, O, I}));
    CHECK(select(af, Semantics::Preferred) == stable);
    CHECK(select(af, Semantics::SemiStable) == stable);
}

TEST_CASE("three cycle has only the all-undec labelling") {
    ArgumentationFramework af = tu::three_cycle();
    Labelling all_undec(3, Label::Undec);
    CHECK(enumerate_complete(af) == std::vector<Labelling>{all_undec});
    CHECK(select(af, Semantics::Stable).empty());
    CHECK(select(af, Semantics::Preferred) == std::vector<Labelling>{all_undec});
    CHECK(select(af, Semantics::SemiStable) == std::vector<Labelling>{all_undec});
    CHECK(grounded_fixpoint(af) == all_undec);
}

TEST_CASE("edge cases") {
    ArgumentationFramework empty({}, {});
    CHECK(enumerate_complete(empty) == std::vector<Labelling>{Labelling(0, U)});
    CHECK(select(empty, Semantics::Stable).size() == 1);
    CHECK(grounded_fixpoint(empty).size() == 0);

    ArgumentationFramework solo = tu::solo_argument();
    CHECK(enumerate_complete(solo) == std::vector<Labelling>{lab({I})});

    ArgumentationFramework self = tu::make_af({"a"}, {{"a", "a"}});
    CHECK(enumerate_complete(self) == std::vector<Labelling>{lab({U})});
    CHECK(select(self, Semantics::Stable).empty());

    // capacity guard on exhaustive enumeration
    std::vector<std::string> names;
    for (int i = 0; i < 26; ++i) names.push_back("x" + std::to_string(i));
    ArgumentationFramework big(names, {});
    CHECK_THROWS_AS((void)enumerate_complete(big), TooLargeError);
    CHECK(grounded_fixpoint(big).in_set().size() == 26);   // fixpoint has no cap
}

TEST_CASE("semantics definitions hold on random frameworks") {
    Rng rng(7);
    for (int t = 0; t < 300; ++t) {
        ArgumentationFramework af = random_framework(rng, 7, 0.3);
        CAPTURE(serialize_apx(af));
        auto all = enumerate_complete(af);
        REQUIRE(all == tu::oracle_complete_labellings(af));
        REQUIRE(!all.empty());

        Labelling grounded = grounded_fixpoint(af);
        CHECK(std::find(all.begin(), all.end(), grounded) != all.end());
        // grounded in-set is contained in every complete in-set
        for (const auto& l : all) CHECK(tu::subset_of(grounded.in_set(), l.in_set()));

        auto preferred = select(af, Semantics::Preferred);
        auto stable = select(af, Semantics::Stable);
        auto semi = select(af, Semantics::SemiStable);

        for (const auto& l : all) {
            bool in_maximal = true, undec_minimal = true;
            for (const auto& other : all) {
                if (tu::subset_of(l.in_set(), other.in_set()) &&
                    l.in_set() != other.in_set())
                    in_maximal = false;
                if (tu::subset_of(other.undec_set(), l.undec_set()) &&
                    l.undec_set() != other.undec_set())
                    undec_minimal = false;
            }
            bool is_preferred =
                std::find(preferred.begin(), preferred.end(), l) != preferred.end();
            bool is_stable = std::find(stable.begin(), stable.end(), l) != stable.end();
            bool is_semi = std::find(semi.begin(), semi.end(), l) != semi.end();
            CHECK(is_preferred == in_maximal);
            CHECK(is_stable == l.undec_set().empty());
            CHECK(is_semi == undec_minimal);
        }
    }
}
