#include <stdexcept>

#include "casimir/units.hpp"
#include "doctest.h"

using namespace casimir::units;

TEST_CASE("length parsing requires and honors suffixes") {
  CHECK(parse_length("100um", "--a") == doctest::Approx(100e-6).epsilon(1e-15));
  CHECK(parse_length("5mm", "--L") == doctest::Approx(5e-3).epsilon(1e-15));
  CHECK(parse_length("250nm", "--d") == doctest::Approx(250e-9).epsilon(1e-15));
  CHECK(parse_length("1e-6m", "--d") == doctest::Approx(1e-6).epsilon(1e-15));
  CHECK(parse_length("0.5um", "--eps") == doctest::Approx(0.5e-6).epsilon(1e-15));

  CHECK_THROWS_AS(parse_length("100", "--a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_length("abcum", "--a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_length("um", "--a"), std::invalid_argument);
  try {
    parse_length("100", "--a");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("--a") != std::string::npos);
  }
}

TEST_CASE("area and voltage parsing") {
  CHECK(parse_area("1mm2", "--A") == doctest::Approx(1e-6).epsilon(1e-15));
  CHECK(parse_area("2.5m2", "--A") == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(parse_area("100um2", "--A") == doctest::Approx(1e-10).epsilon(1e-15));
  CHECK_THROWS_AS(parse_area("1mm", "--A"), std::invalid_argument);

  CHECK(parse_voltage("10mV", "--V") == doctest::Approx(1e-2).epsilon(1e-15));
  CHECK(parse_voltage("1.5V", "--V") == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(parse_voltage("200uV", "--V") == doctest::Approx(2e-4).epsilon(1e-15));
  CHECK_THROWS_AS(parse_voltage("10", "--V"), std::invalid_argument);
}

TEST_CASE("fixed scientific formatting") {
  CHECK(format_si(-1.3001257732e-9) == "-1.300125773e-09");
  CHECK(format_si(0.0) == "0.000000000e+00");
  CHECK(format_si(1.0) == "1.000000000e+00");
}
