#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "boolcat/suite.hpp"
#include "test_util.hpp"

using namespace boolcat;
using namespace boolcat::testutil;

TEST_CASE("validation accepts the worked examples") {
  CHECK(validate(exa1_sequent(), exa1_links()).empty());
  CHECK(validate(exa2_sequent(), exa2_links()).empty());
}

TEST_CASE("validation names violations") {
  // Dropping a t self-link.
  auto links = exa2_links();
  links.erase(links.begin());
  auto v = validate(exa2_sequent(), links);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == ViolationKind::TopWithoutSelfLink);

  // A positive-to-positive link is ill-typed.
  links = exa1_links();
  links.push_back({ref(0, "R"), ref(2, "R")});  // a -> a
  v = validate(exa1_sequent(), links);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == ViolationKind::IllTypedLink);

  // Links on f leaves are ill-typed.
  Sequent s = seq_of({"~a | f", "a"});
  v = validate(s, {{ref(0, "R"), ref(1, "")}});
  CHECK(!v.empty());

  // Unresolvable references.
  v = validate(exa1_sequent(), {{ref(0, "LL"), ref(0, "R")}});
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == ViolationKind::BadLeafRef);
}

TEST_CASE("pruning counts") {
  CHECK(pruning_count(exa1()) == 16);
  SimpleNet flat(seq_of({"~a | a"}), {{ref(0, "L"), ref(0, "R")}});
  CHECK(pruning_count(flat) == 1);
  int seen = 0;
  for_each_pruning(flat, [&](const Pruning& p, const std::vector<int>& surv,
                             const std::vector<std::pair<int, int>>& rest) {
    ++seen;
    CHECK(p.choices.empty());
    CHECK(surv.size() == 2);
    CHECK(rest.size() == 1);
    return true;
  });
  CHECK(seen == 1);
}

TEST_CASE("pruning budget") {
  std::vector<Formula> fs;
  Formula big = parse_formula("a & a");
  for (int i = 0; i < 5; ++i) big = Formula::conj(big, big);
  fs.push_back(big);  // 63 conjunctions
  SimpleNet net(SimpleNet::Unchecked{}, Sequent(fs), {});
  CHECK_THROWS_AS(is_correct(net), PruningBudgetError);
  CHECK_THROWS_AS(pruning_count(net), PruningBudgetError);
}

namespace {

// Independent surviving-leaf oracle: recompute survivors for a choice map by
// structural recursion, written without reference to LeafTable masks.
void chooser(const Formula& f, int fi, std::string path,
             const std::map<LeafRef, char>& choice, std::vector<LeafRef>& out) {
  if (f.is_leaf()) {
    out.push_back({fi, path});
    return;
  }
  if (f.kind() == Formula::Kind::And) {
    char c = choice.at({fi, path});
    chooser(c == 'L' ? f.left() : f.right(), fi, path + c, choice, out);
    return;
  }
  chooser(f.left(), fi, path + "L", choice, out);
  chooser(f.right(), fi, path + "R", choice, out);
}

SimpleNet random_net(Sampler& s) {
  Formula a = s.formula();
  Formula b = s.formula();
  Hom h;
  if (!s.hom_at(a, b, h)) return s.hom().net;
  return h.net;
}

}  // namespace

TEST_CASE("pruning survivors match the independent chooser") {
  Sampler s(2024, 2, 2);
  for (int round = 0; round < 200; ++round) {
    SimpleNet net = random_net(s);
    for_each_pruning(net, [&](const Pruning& p, const std::vector<int>& surv,
                              const std::vector<std::pair<int, int>>&) {
      std::map<LeafRef, char> choice;
      for (const auto& [addr, c] : p.choices) choice[addr] = c;
      std::vector<LeafRef> expect;
      for (std::size_t fi = 0; fi < net.sequent().size(); ++fi)
        chooser(net.sequent()[fi], static_cast<int>(fi), "", choice, expect);
      std::vector<LeafRef> got;
      for (int id : surv) got.push_back(net.table().info(id).ref);
      CHECK(got == expect);
      return true;
    });
  }
}

TEST_CASE("correctness of the worked examples") {
  CHECK(is_correct(exa1()));
  CHECK(is_correct(exa2()));
  // The two-link prenet over ~b&a, ~a&b has an all-links-gone pruning.
  SimpleNet bad(seq_of({"~b & a", "~a & b"}),
                {{ref(0, "L"), ref(1, "R")}, {ref(1, "L"), ref(0, "R")}});
  CHECK(!is_correct(bad));
}

TEST_CASE("correctness agrees with pruning enumeration") {
  Sampler s(4711, 2, 2);
  for (int round = 0; round < 200; ++round) {
    SimpleNet net = random_net(s);
    bool oracle = true;
    for_each_pruning(net, [&](const Pruning&, const std::vector<int>&,
                              const std::vector<std::pair<int, int>>& rest) {
      if (rest.empty()) {
        oracle = false;
        return false;
      }
      return true;
    });
    CHECK(is_correct(net) == oracle);
  }
}

TEST_CASE("identity bundles are correct") {
  Sampler s(99, 2, 3);
  for (int i = 0; i < 100; ++i) {
    Formula a = s.formula();
    CHECK(is_correct(generator_net(Gen::Id, {a})));
  }
}

TEST_CASE("equality is literal") {
  CHECK(exa1() == exa1());
  auto links = exa1_links();
  links.pop_back();
  CHECK(exa1() != SimpleNet(exa1_sequent(), links));
  CHECK(exa1() != exa2());
}

TEST_CASE("sum is a semilattice join and leq its order") {
  Sampler s(5150, 2, 2);
  for (int round = 0; round < 200; ++round) {
    Formula a = s.formula();
    Formula b = s.formula();
    Hom f, g, h;
    if (!s.hom_at(a, b, f) || !s.hom_at(a, b, g) || !s.hom_at(a, b, h)) continue;
    CHECK(sum(f.net, f.net) == f.net);
    CHECK(sum(f.net, g.net) == sum(g.net, f.net));
    CHECK(sum(sum(f.net, g.net), h.net) == sum(f.net, sum(g.net, h.net)));
    CHECK(leq(f.net, sum(f.net, g.net)));
    if (leq(f.net, g.net) && leq(g.net, f.net)) CHECK(f.net == g.net);
    // Monotonicity of correctness under added links.
    if (is_correct(f.net)) CHECK(is_correct(sum(f.net, g.net)));
  }
  CHECK_THROWS(sum(exa1(), exa2()));
}

TEST_CASE("juxtaposition relocates leaf-wise") {
  Formula a = parse_formula("a");
  Formula b = parse_formula("b");
  SimpleNet id_a = generator_net(Gen::Id, {a});
  SimpleNet id_b = generator_net(Gen::Id, {b});
  CHECK(juxtapose_and(id_a, id_b) == generator_net(Gen::Id, {Formula::conj(a, b)}));
  CHECK(juxtapose_or(id_a, id_b) == generator_net(Gen::Id, {Formula::disj(a, b)}));
}

TEST_CASE("juxtaposition preserves correctness") {
  Sampler s(31337, 2, 2);
  int done = 0;
  for (int round = 0; round < 400 && done < 200; ++round) {
    Hom f = s.hom();
    Hom g = s.hom();
    if (!is_correct(f.net) || !is_correct(g.net)) continue;
    ++done;
    CHECK(is_correct(juxtapose_and(f.net, g.net)));
    CHECK(is_correct(juxtapose_or(f.net, g.net)));
  }
  CHECK(done == 200);
}
