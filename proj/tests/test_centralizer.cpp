#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "testutil.hpp"

using namespace fillcurve;

namespace {

std::vector<MonicPoly> irreducible_monics(const FieldCtxPtr& K, int n) {
    std::vector<MonicPoly> out;
    std::vector<std::int64_t> odo(static_cast<std::size_t>(n), 0);
    while (true) {
        std::vector<FieldElem> tail;
        for (int j = 0; j < n; ++j) tail.push_back(element_at(K, odo[static_cast<std::size_t>(j)]));
        MonicPoly f(K, std::move(tail));
        if (is_irreducible(f)) out.push_back(f);
        int pos = n - 1;
        while (pos >= 0 && ++odo[static_cast<std::size_t>(pos)] == K->size()) odo[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
    }
    return out;
}

std::int64_t gl_centralizer_scan(const Mat& a0) {
    std::int64_t count = 0;
    for_each_gl(a0.ctx(), a0.n(), [&](const Mat& b) {
        if (b * a0 == a0 * b) ++count;
    });
    return count;
}

}  // namespace

TEST_CASE("centralizer generators") {
    auto F2 = make_field(2, 1);
    MonicPoly f(F2, {one(F2), one(F2), zero(F2)});  // t^3+t+1
    const Mat a0 = companion(f, CompanionShape::BottomRow);
    const Mat b0 = centralizer_generator(a0);
    REQUIRE(b0 * a0 == a0 * b0);
    REQUIRE(mat_pow(b0, 7) == Mat::identity(F2, 3));
    for (std::int64_t s = 1; s < 7; ++s) REQUIRE(mat_pow(b0, s) != Mat::identity(F2, 3));

    auto F3 = make_field(3, 1);
    MonicPoly g(F3, {one(F3), zero(F3)});  // t^2+1
    const Mat a1 = companion(g, CompanionShape::BottomRow);
    const Mat b1 = centralizer_generator(a1);
    REQUIRE(b1 * a1 == a1 * b1);
    REQUIRE(mat_pow(b1, 8) == Mat::identity(F3, 2));
    for (std::int64_t s = 1; s < 8; ++s) REQUIRE(mat_pow(b1, s) != Mat::identity(F3, 2));

    // Reducible input is rejected.
    MonicPoly red(F2, {zero(F2), zero(F2), zero(F2)});  // t^3
    REQUIRE_THROWS_AS(centralizer_generator(companion(red, CompanionShape::BottomRow)),
                      std::invalid_argument);
}

TEST_CASE("centralizer orders cross-checked by GL scans") {
    auto F2 = make_field(2, 1);
    MonicPoly f(F2, {one(F2), one(F2), zero(F2)});
    const Mat a0 = companion(f, CompanionShape::BottomRow);
    REQUIRE(centralizer_order(a0) == 7);
    REQUIRE(gl_centralizer_scan(a0) == 7);

    MonicPoly f2(F2, {one(F2), one(F2)});  // t^2+t+1
    const Mat a1 = companion(f2, CompanionShape::BottomRow);
    REQUIRE(centralizer_order(a1) == 3);
    REQUIRE(gl_centralizer_scan(a1) == 3);

    auto F3 = make_field(3, 1);
    MonicPoly f3(F3, {one(F3), zero(F3)});  // t^2+1
    const Mat a2 = companion(f3, CompanionShape::BottomRow);
    REQUIRE(centralizer_order(a2) == 8);
    REQUIRE(gl_centralizer_scan(a2) == 8);
}

TEST_CASE("PGL image orders") {
    auto F2 = make_field(2, 1);
    MonicPoly f(F2, {one(F2), one(F2), zero(F2)});
    REQUIRE(pgl_image_order(companion(f, CompanionShape::BottomRow)) == 7);

    auto F4 = make_field(2, 2);
    MonicPoly fw(F4, {element_at(F4, 1), zero(F4), zero(F4)});  // t^3 - w (char 2)
    REQUIRE(pgl_image_order(companion(fw, CompanionShape::BottomRow)) == 21);

    auto F3 = make_field(3, 1);
    MonicPoly f3(F3, {one(F3), zero(F3)});
    REQUIRE(pgl_image_order(companion(f3, CompanionShape::BottomRow)) == 4);
}

TEST_CASE("twisted commutation image orders") {
    auto F2 = make_field(2, 1);
    MonicPoly f(F2, {one(F2), one(F2), zero(F2)});
    REQUIRE(pi_image_order(companion(f, CompanionShape::BottomRow)) == 1);  // F_2^x is trivial

    auto F3 = make_field(3, 1);
    MonicPoly f3(F3, {one(F3), zero(F3)});
    REQUIRE(pi_image_order(companion(f3, CompanionShape::BottomRow)) == 2);

    auto F4 = make_field(2, 2);
    MonicPoly fw(F4, {element_at(F4, 1), zero(F4), zero(F4)});
    REQUIRE(pi_image_order(companion(fw, CompanionShape::BottomRow)) == 3);
}

TEST_CASE("support condition") {
    auto F4 = make_field(2, 2);
    MonicPoly fw(F4, {element_at(F4, 1), zero(F4), zero(F4)});
    REQUIRE(support_condition(fw) == 3);

    auto F3 = make_field(3, 1);
    MonicPoly f3(F3, {one(F3), zero(F3)});
    REQUIRE(support_condition(f3) == 2);

    auto F2 = make_field(2, 1);
    for (const auto& f : irreducible_monics(F2, 3)) REQUIRE_FALSE(support_condition(f).has_value());
}

TEST_CASE("diagonal witnesses") {
    auto F3 = make_field(3, 1);
    MonicPoly f3(F3, {one(F3), zero(F3)});  // t^2+1
    const Mat a0 = companion(f3, CompanionShape::BottomRow);
    const Mat b = diag_witness(from_int(F3, 2), a0);
    REQUIRE(to_string(b) == "1,0;0,2");
    REQUIRE(to_string(a0 * b) == "0,2;2,0");

    auto F4 = make_field(2, 2);
    const FieldElem w = element_at(F4, 1);
    MonicPoly fw(F4, {w, zero(F4), zero(F4)});
    const Mat a1 = companion(fw, CompanionShape::BottomRow);
    REQUIRE_NOTHROW(diag_witness(w, a1));

    // No valid k at q = 2: the witness is rejected.
    auto F2 = make_field(2, 1);
    MonicPoly f2(F2, {one(F2), one(F2), zero(F2)});
    REQUIRE_THROWS_AS(diag_witness(one(F2), companion(f2, CompanionShape::BottomRow)),
                      std::invalid_argument);
    // Non-primitive rho is rejected.
    REQUIRE_THROWS_AS(diag_witness(one(F3), a0), std::invalid_argument);
    // Wrong layout is rejected.
    auto F3b = make_field(3, 1);
    const Mat curve_layout = companion(cubic_to_poly(Cubic{zero(F3b), one(F3b), one(F3b)}),
                                       CompanionShape::Curve3);
    REQUIRE_THROWS_AS(diag_witness(from_int(F3b, 2), curve_layout), std::invalid_argument);
}

TEST_CASE("exhaustive biconditional for n = 2, 3 at q = 2, 3") {
    for (std::int64_t q : {2, 3}) {
        auto K = make_field(q, 1);
        for (int n : {2, 3}) {
            for (const auto& f : irreducible_monics(K, n)) {
                const Mat a0 = companion(f, CompanionShape::BottomRow);
                const auto rep = centralizer_report(a0);
                std::int64_t Q = 1;
                for (int i = 0; i < n; ++i) Q *= q;
                REQUIRE(rep.z_gl_order == Q - 1);
                REQUIRE(rep.pgl_image_order == (Q - 1) / (q - 1));
                REQUIRE(rep.z_pgl_order == rep.pgl_image_order * rep.pi_image_order);
                REQUIRE((rep.pi_image_order > 1) == rep.support_condition_holds);
                if (rep.support_k) REQUIRE(rep.pi_image_order == *rep.support_k);
                if (rep.support_k) {
                    // A primitive root of unity of order k exists and the
                    // diagonal witness identity holds.
                    const FieldElem g = primitive_element(K);
                    const FieldElem rho = pow(g, (q - 1) / *rep.support_k);
                    REQUIRE_NOTHROW(diag_witness(rho, a0));
                }
            }
        }
    }
}

TEST_CASE("the Singer generator of the curve side agrees with the centralizer construction") {
    auto F3 = make_field(3, 1);
    const Mat a = companion3(Cubic{zero(F3), one(F3), one(F3)});
    REQUIRE(singer_generator(a) == centralizer_generator(transpose(a)));
}

TEST_CASE("powers of the generator exhaust the centralizer's PGL image") {
    for (std::int64_t q : {2, 3}) {
        auto K = make_field(q, 1);
        for (int n : {2, 3}) {
            const MonicPoly f = irreducible_monics(K, n).front();
            const Mat a0 = companion(f, CompanionShape::BottomRow);
            const Mat b0 = centralizer_generator(a0);
            std::int64_t Q = 1;
            for (int i = 0; i < n; ++i) Q *= q;
            std::set<Mat> powers;
            Mat cur = Mat::identity(K, n);
            for (std::int64_t s = 0; s < Q - 1; ++s) {
                cur = s == 0 ? cur : cur * b0;
                powers.insert(pgl_normalize(cur));
            }
            REQUIRE(static_cast<std::int64_t>(powers.size()) == (Q - 1) / (q - 1));
            std::set<Mat> commutant_image;
            for_each_gl(K, n, [&](const Mat& b) {
                if (b * a0 == a0 * b) commutant_image.insert(pgl_normalize(b));
            });
            REQUIRE(powers == commutant_image);
        }
    }
}

TEST_CASE("centralizer report JSON shape") {
    auto F3 = make_field(3, 1);
    MonicPoly f3(F3, {one(F3), zero(F3)});
    const auto rep = centralizer_report(companion(f3, CompanionShape::BottomRow));
    const Json j = to_json(rep);
    REQUIRE(j["n"] == 2);
    REQUIRE(j["q"] == 3);
    REQUIRE(j["z_gl_order"] == 8);
    REQUIRE(j["pgl_image_order"] == 4);
    REQUIRE(j["pi_image_order"] == 2);
    REQUIRE(j["support_k"] == 2);
}
