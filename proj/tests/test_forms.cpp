#include <doctest.h>

#include "rdga/errors.hpp"
#include "rdga/sampling.hpp"

using namespace rdga;

namespace {
ChartPtr plane() { return Chart::make({"x", "y"}, Ring::rational(2)); }
ChartPtr space() { return Chart::make({"x", "y", "z"}, Ring::rational(3)); }
Form signed_by(int p, const Form& w) { return p % 2 ? -w : w; }
}  // namespace

TEST_SUITE("forms") {
    TEST_CASE("wedge signs of basis forms") {
        ChartPtr ch = space();
        Form dx = Form::dx(ch, 0), dy = Form::dx(ch, 1), dz = Form::dx(ch, 2);
        CHECK((dx * dy + dy * dx).is_zero());
        CHECK((dx * dx).is_zero());
        CHECK((dz * dx * dy - dx * dy * dz).is_zero());
        CHECK(merge_sign(0b10, 0b01) == -1);
        CHECK(merge_sign(0b001, 0b110) == 1);
    }

    TEST_CASE("exterior derivative on coordinates") {
        ChartPtr ch = plane();
        Form x = Form::coordinate(ch, 0), y = Form::coordinate(ch, 1);
        CHECK(((x * y).d() - (y * Form::dx(ch, 0) + x * Form::dx(ch, 1))).is_zero());
        CHECK(((x * Form::dx(ch, 1)).d() - Form::dx(ch, 0) * Form::dx(ch, 1)).is_zero());
    }

    TEST_CASE("d² = 0, graded Leibniz and graded commutativity on seeded samples") {
        ChartPtr ch = space();
        Sampler s(3);
        for (int k = 0; k < 100; ++k) {
            Form w = s.any_form(ch), e = s.any_form(ch);
            int p = w.degree(), q = e.degree();
            CHECK(w.d().d().is_zero());
            CHECK(((w * e).d() - (w.d() * e + signed_by(p, w * e.d()))).is_zero());
            CHECK((w * e - signed_by(p * q, e * w)).is_zero());
        }
    }

    TEST_CASE("leibnizator of d vanishes and that of a non-derivation does not") {
        ChartPtr ch = plane();
        Sampler s(4);
        FormMap d = [](const Form& w) { return w.d(); };
        Form x = Form::coordinate(ch, 0);
        FormMap twisted = [x](const Form& w) { return x * w.d(); };
        FormMap square = [x](const Form& w) { return x * x * w; };
        for (int k = 0; k < 20; ++k) {
            Form w = s.any_form(ch), e = s.any_form(ch);
            CHECK(leibnizator(d, 1, w, e).is_zero());
            CHECK(leibnizator(twisted, 1, w, e).is_zero());
        }
        CHECK_FALSE(leibnizator(square, 0, x, x).is_zero());
    }

    TEST_CASE("degree of mixed forms is rejected") {
        ChartPtr ch = plane();
        Form mixed = Form::coordinate(ch, 0) + Form::dx(ch, 1);
        CHECK_FALSE(mixed.is_homogeneous());
        CHECK_THROWS_AS(mixed.degree(), Inhomogeneous);
        CHECK(mixed.degrees() == std::vector<int>{0, 1});
    }

    TEST_CASE("forms on different charts do not mix") {
        CHECK_THROWS_AS(Form::dx(plane(), 0) + Form::dx(space(), 0), ChartMismatch);
        CHECK_NOTHROW(Form::dx(plane(), 0) + Form::dx(plane(), 1));
    }
}
