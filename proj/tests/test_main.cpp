#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "annulus/field.hpp"

int main(int argc, char** argv) {
    annulus::set_field(7);
    doctest::Context ctx(argc, argv);
    return ctx.run();
}
