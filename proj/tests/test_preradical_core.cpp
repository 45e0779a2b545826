#include "preradicals/json_io.hpp"
#include "preradicals/labels.hpp"
#include "preradicals/preradical.hpp"
#include "preradicals/verify.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

using namespace preradicals;

namespace {

struct A2Fixture {
    Quiver q = type_a_quiver(2);
    int p;
    std::vector<Preradical> prs;
    LabelDictionary dict;
    std::map<std::string, Preradical> by_name;

    explicit A2Fixture(int prime) : p(prime) {
        prs = enumerate_preradicals(q, p);
        dict = structural_dictionary(q, p);
        for (const auto& pr : prs)
            by_name.emplace(short_name(pr, dict), pr);
    }
    const Preradical& at(const std::string& name) const { return by_name.at(name); }
};

// Independent evaluation oracle: sum the images of sigma(N) under ALL
// morphisms N -> X (every coefficient combination of the hom basis),
// not just the basis elements the library uses.
Subrep oracle_evaluate(const Preradical& pr, const Rep& x) {
    Subrep acc = zero_subrep(x);
    for (size_t i = 0; i < pr.values.size(); ++i) {
        auto [sub, incl] = sub_to_rep(pr.values[i]);
        auto basis = hom_basis(pr.values[i].ambient, x);
        std::vector<int> coeff(basis.size(), 0);
        if (basis.empty())
            continue;
        while (true) {
            RepMorphism f = zero_morphism(pr.values[i].ambient, x);
            for (size_t k = 0; k < basis.size(); ++k)
                if (coeff[k]) {
                    std::vector<Matrix> scaled;
                    for (const auto& m : basis[k].comp)
                        scaled.push_back(scale(coeff[k], m));
                    f = add_morphisms(f, RepMorphism{f.source, f.target, std::move(scaled)});
                }
            acc = subrep_sum(acc, image_subrep(compose(f, incl)));
            size_t k = 0;
            while (k < coeff.size() && coeff[k] == pr.p - 1)
                coeff[k++] = 0;
            if (k == coeff.size())
                break;
            ++coeff[k];
        }
    }
    return acc;
}

// Same idea for alpha: images of f . h over ALL morphisms f : M -> L.
Preradical oracle_alpha(const RepMorphism& h) {
    const Quiver& q = h.source.q;
    const int p = h.source.p;
    Preradical out;
    out.q = q;
    out.p = p;
    for (auto& [iv, rep] : type_a_intervals(q, p)) {
        Subrep acc = zero_subrep(rep);
        auto basis = hom_basis(h.target, rep);
        std::vector<int> coeff(basis.size(), 0);
        bool done = basis.empty();
        while (!done) {
            RepMorphism f = zero_morphism(h.target, rep);
            for (size_t k = 0; k < basis.size(); ++k)
                if (coeff[k]) {
                    std::vector<Matrix> scaled;
                    for (const auto& m : basis[k].comp)
                        scaled.push_back(scale(coeff[k], m));
                    f = add_morphisms(f, RepMorphism{f.source, f.target, std::move(scaled)});
                }
            acc = subrep_sum(acc, image_subrep(compose(f, h)));
            size_t k = 0;
            while (k < coeff.size() && coeff[k] == p - 1)
                coeff[k++] = 0;
            done = (k == coeff.size());
            if (!done)
                ++coeff[k];
        }
        out.indecs.push_back(iv);
        out.values.push_back(std::move(acc));
    }
    return out;
}

} // namespace

TEST_CASE("naturality validation") {
    Quiver a2 = type_a_quiver(2);
    CHECK(validate_naturality(zero_preradical(a2, 2)));
    CHECK(validate_naturality(top_preradical(a2, 2)));

    // full on the socle simple, zero on P: the inclusion S1 -> P
    // violates naturality
    auto ind = type_a_intervals(a2, 2);
    Preradical bad;
    bad.q = a2;
    bad.p = 2;
    for (auto& [iv, rep] : ind) {
        bad.indecs.push_back(iv);
        bad.values.push_back(iv == Interval{1, 1} ? full_subrep(rep) : zero_subrep(rep));
    }
    CHECK_FALSE(validate_naturality(bad));
    CHECK_THROWS_AS(make_preradical(a2, 2, bad.values), shape_error);
}

TEST_CASE("enumeration counts") {
    CHECK(enumerate_preradicals(type_a_quiver(1), 2).size() == 2);
    for (int p : {2, 3, 5})
        CHECK(enumerate_preradicals(type_a_quiver(2), p).size() == 8);
    CHECK(enumerate_preradicals(Quiver{2, {{1, 0}}, {}}, 2).size() == 8);
    // the count is a field-independent combinatorial invariant;
    // equioriented paths follow 2^(n(n+1)/2)
    CHECK(enumerate_preradicals(type_a_quiver(3), 2).size() == 64);
    CHECK(enumerate_preradicals(type_a_quiver(3), 3).size() == 64);
    CHECK(enumerate_preradicals(type_a_quiver(4), 2).size() == 1024);
    CHECK(enumerate_preradicals(Quiver{3, {{0, 1}, {2, 1}}, {}}, 2).size() == 69);
    CHECK(enumerate_preradicals(Quiver{3, {{0, 1}, {2, 1}}, {}}, 3).size() == 69);
    CHECK(enumerate_preradicals(Quiver{3, {{1, 0}, {1, 2}}, {}}, 2).size() == 69);

    Limits tight;
    tight.max_preradical_tuples = 4;
    CHECK_THROWS_AS(enumerate_preradicals(type_a_quiver(2), 2, tight), capacity_error);
}

TEST_CASE("the eight preradicals of the two-vertex path") {
    const std::set<std::string> expected = {"0",  "rho1",   "omega0", "gamma0",
                                            "xi", "iota0", "gamma1", "1"};
    for (int p : {2, 3, 5}) {
        A2Fixture fx(p);
        std::set<std::string> names;
        for (const auto& pr : fx.prs)
            names.insert(short_name(pr, fx.dict));
        CHECK(names == expected);
    }
    // orientation-proof structural labels
    Quiver reversed{2, {{1, 0}}, {}};
    auto prs = enumerate_preradicals(reversed, 2);
    LabelDictionary dict = structural_dictionary(reversed, 2);
    std::set<std::string> names;
    for (const auto& pr : prs)
        names.insert(short_name(pr, dict));
    CHECK(names == expected);
}

TEST_CASE("evaluate") {
    for (int p : {2, 3}) {
        A2Fixture fx(p);
        auto ind = type_a_intervals(fx.q, p);
        Rep p_rep = ind[1].second, s1 = ind[2].second, s2 = ind[0].second;
        Rep x = direct_sum({p_rep, s1}).total;

        CHECK(evaluate(fx.at("1"), x) == full_subrep(x));
        CHECK(evaluate(fx.at("0"), x) == zero_subrep(x));

        // rho1 on P + S1: the socle of the P summand and nothing else
        Subrep val = evaluate(fx.at("rho1"), x);
        CHECK(val == oracle_evaluate(fx.at("rho1"), x));
        CHECK(val.dims() == std::vector<int>{0, 1});
        CHECK(val.spaces[1].basis == Matrix::from_rows(p, {{1, 0}}));

        // against the oracle on every preradical for a couple of objects,
        // including one with two-dimensional hom spaces
        for (const auto& pr : fx.prs) {
            CHECK(evaluate(pr, x) == oracle_evaluate(pr, x));
            Rep y = direct_sum({s2, s2, s1}).total;
            CHECK(evaluate(pr, y) == oracle_evaluate(pr, y));
            Rep z = direct_sum({p_rep, p_rep}).total;
            CHECK(evaluate(pr, z) == oracle_evaluate(pr, z));
        }

        // additivity: the value on a sum of indecomposables is the sum
        // of the table values under the canonical inclusions
        DirectSum ds = direct_sum({s2, p_rep, s1});
        for (const auto& pr : fx.prs) {
            Subrep whole = evaluate(pr, ds.total);
            Subrep expected = zero_subrep(ds.total);
            for (size_t k = 0; k < 3; ++k) {
                auto [sub, incl] = sub_to_rep(pr.values[k]);
                expected = subrep_sum(expected, image_subrep(compose(ds.inclusions[k], incl)));
            }
            CHECK(whole == expected);
        }

        Rep wrong = interval_rep(type_a_quiver(3), p, {0, 0});
        CHECK_THROWS_AS(evaluate(fx.at("1"), wrong), shape_error);
    }
}

TEST_CASE("order relations") {
    A2Fixture fx(2);
    for (const auto& pr : fx.prs) {
        CHECK(leq(fx.at("0"), pr));
        CHECK(leq(pr, fx.at("1")));
    }
    CHECK(leq(fx.at("rho1"), fx.at("xi")));
    CHECK_FALSE(leq(fx.at("xi"), fx.at("omega0")));
}

TEST_CASE("product") {
    for (int p : {2, 3}) {
        A2Fixture fx(p);
        for (const auto& pr : fx.prs) {
            CHECK(product(fx.at("1"), pr) == pr);
            CHECK(product(pr, fx.at("1")) == pr);
        }
        CHECK(product(fx.at("rho1"), fx.at("rho1")) == fx.at("0"));
        CHECK(product(fx.at("iota0"), fx.at("iota0")) == fx.at("iota0"));
        CHECK(product(fx.at("rho1"), fx.at("xi")) == fx.at("0"));
    }
}

TEST_CASE("coproduct") {
    for (int p : {2, 3}) {
        A2Fixture fx(p);
        for (const auto& pr : fx.prs) {
            CHECK(coproduct(fx.at("0"), pr) == pr);
            CHECK(coproduct(pr, fx.at("0")) == pr);
        }
        CHECK(coproduct(fx.at("rho1"), fx.at("rho1")) == fx.at("rho1"));
        // (xi : xi) pulls the full value of the quotient back to all of P
        Preradical xx = coproduct(fx.at("xi"), fx.at("xi"));
        CHECK(xx != fx.at("xi"));
        CHECK(xx.values[1].is_full());
    }
}

TEST_CASE("asymmetric products and coproducts") {
    for (int p : {2, 3}) {
        A2Fixture fx(p);
        // (gamma0 : rho1): full on S2, socle preimage on P, zero on S1
        CHECK(coproduct(fx.at("gamma0"), fx.at("rho1")) == fx.at("xi"));
        // (gamma1 . iota0): the socle of P evaluates to zero under gamma1
        CHECK(product(fx.at("gamma1"), fx.at("iota0")) == fx.at("gamma0"));
        // (iota0 . gamma1): full value on P re-evaluates to the socle
        CHECK(product(fx.at("iota0"), fx.at("gamma1")) == fx.at("xi"));
    }
}

TEST_CASE("alpha and omega of non-invertible morphisms") {
    for (int p : {2, 3}) {
        A2Fixture fx(p);
        Rep p_rep = interval_rep(fx.q, p, {0, 1});
        Rep s2 = interval_rep(fx.q, p, {0, 0});
        Rep s1 = interval_rep(fx.q, p, {1, 1});

        auto proj = hom_basis(p_rep, s2);
        REQUIRE(proj.size() == 1);
        CHECK(omega(proj[0]) == fx.at("iota0"));

        auto incl = hom_basis(s1, p_rep);
        REQUIRE(incl.size() == 1);
        CHECK(alpha(incl[0]) == fx.at("rho1"));
    }
}

TEST_CASE("idempotents and radicals of the two-vertex path") {
    const std::set<std::string> idem_expected = {"0", "gamma0", "omega0", "iota0", "gamma1", "1"};
    const std::set<std::string> rad_expected = {"0", "rho1", "gamma0", "omega0", "gamma1", "1"};
    for (int p : {2, 3}) {
        A2Fixture fx(p);
        std::set<std::string> idem, rad;
        for (const auto& pr : fx.prs) {
            if (is_idempotent(pr))
                idem.insert(short_name(pr, fx.dict));
            if (is_radical(pr))
                rad.insert(short_name(pr, fx.dict));
        }
        CHECK(idem == idem_expected);
        CHECK(rad == rad_expected);
    }
}

TEST_CASE("joins and meets") {
    A2Fixture fx(2);
    for (const auto& pr : fx.prs) {
        CHECK(join({pr, pr}) == pr);
        CHECK(meet({pr, pr}) == pr);
    }
    CHECK(join({fx.at("rho1"), fx.at("gamma0")}) == fx.at("xi"));
    CHECK(meet({fx.at("iota0"), fx.at("gamma1")}) == fx.at("xi"));
    CHECK_THROWS_AS(join({}), shape_error);
    CHECK_THROWS_AS(meet({}), shape_error);
}

TEST_CASE("alpha and omega on the two-vertex path") {
    for (int p : {2, 3}) {
        A2Fixture fx(p);
        auto ind = type_a_intervals(fx.q, p);
        Rep s2 = ind[0].second, p_rep = ind[1].second, s1 = ind[2].second;

        CHECK(alpha(zero_morphism(s1, s1)) == fx.at("0"));
        CHECK(alpha(identity_morphism(s1)) == fx.at("omega0"));
        CHECK(omega(identity_morphism(s2)) == fx.at("omega0"));
        CHECK(alpha(identity_morphism(s2)) == fx.at("gamma0"));
        CHECK(omega(identity_morphism(s1)) == fx.at("gamma1"));
        CHECK(alpha(identity_morphism(p_rep)) == fx.at("gamma1"));
        CHECK(omega(identity_morphism(p_rep)) == fx.at("gamma0"));

        // the hom-basis computation agrees with the all-morphisms oracle
        for (auto& [iv, rep] : ind) {
            CHECK(alpha(identity_morphism(rep)) == oracle_alpha(identity_morphism(rep)));
            for (auto& [iv2, rep2] : ind)
                for (const auto& h : hom_basis(rep, rep2))
                    CHECK(alpha(h) == oracle_alpha(h));
        }
    }
}

TEST_CASE("alpha of an isomorphism depends only on the target") {
    // a twisted copy of the full interval: nontrivial arrow scalar
    const int p = 5;
    A2Fixture fx(p);
    Rep p_rep = interval_rep(fx.q, p, {0, 1});
    for (int c : {2, 3, 4}) {
        Rep twisted = p_rep;
        twisted.arrows[0] = Matrix::from_rows(p, {{c}});
        // h : P -> twisted, components (1, c)
        std::vector<Matrix> comp = {Matrix::from_rows(p, {{1}}), Matrix::from_rows(p, {{c}})};
        RepMorphism h = make_morphism(p_rep, twisted, comp);
        CHECK(alpha(h) == alpha(identity_morphism(twisted)));
        CHECK(alpha(h) == alpha(identity_morphism(p_rep)));
        CHECK(alpha(h) == fx.at("gamma1"));
        CHECK(omega(identity_morphism(twisted)) == fx.at("gamma0"));
    }
}

TEST_CASE("delta") {
    A2Fixture fx(2);
    Quiver op = opposite(fx.q);
    CHECK(delta(fx.at("0")) == top_preradical(op, 2));
    CHECK(delta(fx.at("1")) == zero_preradical(op, 2));

    auto op_prs = enumerate_preradicals(op, 2);
    auto member = [&](const Preradical& pr) {
        for (const auto& x : op_prs)
            if (x == pr)
                return true;
        return false;
    };
    std::set<std::vector<int>> images;
    for (const auto& pr : fx.prs) {
        Preradical d = delta(pr);
        CHECK(member(d));
        CHECK(delta_inverse(d) == pr);
        images.insert(preradical_key(d));
        // order reversal against every other element
        for (const auto& other : fx.prs)
            CHECK(leq(pr, other) == leq(delta(other), d));
    }
    CHECK(images.size() == 8);

    // the six idempotents map onto the six radicals of the opposite lattice
    std::set<std::vector<int>> idem_images, op_radicals;
    for (const auto& pr : fx.prs)
        if (is_idempotent(pr))
            idem_images.insert(preradical_key(delta(pr)));
    for (const auto& pr : op_prs)
        if (is_radical(pr))
            op_radicals.insert(preradical_key(pr));
    CHECK(idem_images == op_radicals);

    // the duality swaps the operations
    CHECK(delta(product(fx.at("rho1"), fx.at("xi"))) ==
          coproduct(delta(fx.at("xi")), delta(fx.at("rho1"))));
}

TEST_CASE("T and F classes, reconstruction identities") {
    A2Fixture fx(2);
    // iota0 is full exactly on the two simples
    CHECK(t_class(fx.at("iota0")) == std::vector<int>{0, 2});
    CHECK(f_class(fx.at("rho1")) == std::vector<int>{0, 2});

    CHECK(reconstruct_from_alpha(fx.at("0")) == fx.at("0"));
    CHECK(reconstruct_from_alpha(fx.at("xi")) == fx.at("xi"));
    for (const auto& pr : fx.prs) {
        CHECK(reconstruct_from_alpha(pr) == pr);
        CHECK(reconstruct_from_omega(pr) == pr);
        CHECK(is_idempotent(pr) == (t_class_alpha_join(pr) == pr));
        CHECK(is_radical(pr) == (f_class_omega_meet(pr) == pr));
    }
    CHECK(t_class_alpha_join(fx.at("iota0")) == fx.at("iota0"));
}

TEST_CASE("law batteries hold on zigzag orientations") {
    // the slower Galois suite is exercised elsewhere; these cover the
    // orientation-dependent paths of the core calculus
    for (const Quiver& q : {Quiver{3, {{0, 1}, {2, 1}}, {}}, Quiver{3, {{1, 0}, {1, 2}}, {}}}) {
        CHECK(verify_order(q, 2).all_pass());
        CHECK(verify_delta(q, 2).all_pass());
        CHECK(verify_alpha_omega(q, 2).all_pass());
        CHECK(verify_joins(q, 2).all_pass());
    }
}

TEST_CASE("a lan-res connection on a zigzag") {
    Quiver zigzag{3, {{0, 1}, {2, 1}}, {}};
    AdjointPair adj = lan_res_adjunction(zigzag, {1, 2}, 2);
    auto prs_a = enumerate_preradicals(adj.F.source, 2);
    auto prs_b = enumerate_preradicals(zigzag, 2);
    CHECK(prs_b.size() == 69);
    CHECK(check_galois(adj, prs_a, prs_b).all_pass());
}

TEST_CASE("preradical json round trip") {
    for (int p : {2, 3}) {
        A2Fixture fx(p);
        for (const auto& pr : fx.prs) {
            json j = to_json(pr);
            CHECK(preradical_from_json(j, p) == pr);
        }
    }
    // matrix encoding is the documented row-major triple
    Matrix m = Matrix::from_rows(3, {{1, 2}, {0, 1}});
    json j = to_json(m);
    CHECK(j["rows"] == 2);
    CHECK(j["cols"] == 2);
    CHECK(j["entries"] == json::array({1, 2, 0, 1}));
}
