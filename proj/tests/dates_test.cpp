#include "ledsig/dates.hpp"
#include "ledsig/errors.hpp"

#include <doctest.h>

using ledsig::Date;
using ledsig::InputError;

TEST_CASE("iso parsing accepts valid dates and rejects malformed ones") {
  Date d = Date::parse_iso("2017-03-28");
  CHECK(d.year() == 2017);
  CHECK(d.month() == 3);
  CHECK(d.day() == 28);
  CHECK(d.to_iso() == "2017-03-28");

  CHECK(Date::parse_iso("2020-02-29").day() == 29); // leap day
  CHECK_FALSE(Date::try_parse_iso("2019-02-29").has_value());
  CHECK_FALSE(Date::try_parse_iso("2019-13-01").has_value());
  CHECK_FALSE(Date::try_parse_iso("2019-00-10").has_value());
  CHECK_FALSE(Date::try_parse_iso("2019-04-31").has_value());
  CHECK_FALSE(Date::try_parse_iso("19-04-30").has_value());
  CHECK_FALSE(Date::try_parse_iso("2019/04/30").has_value());
  CHECK_FALSE(Date::try_parse_iso("2019-04-30x").has_value());
  CHECK_FALSE(Date::try_parse_iso("").has_value());
  CHECK_THROWS_AS(Date::parse_iso("not a date"), InputError);
}

TEST_CASE("serial numbers anchor at the unix epoch") {
  CHECK(Date::from_ymd(1970, 1, 1).serial() == 0);
  CHECK(Date::from_ymd(1970, 1, 2).serial() == 1);
  CHECK(Date::from_ymd(1969, 12, 31).serial() == -1);
  CHECK(Date::from_ymd(2017, 1, 1).serial() == 17167);
  CHECK(Date::from_serial(17167).to_iso() == "2017-01-01");
  CHECK_THROWS_AS(Date::from_ymd(2017, 2, 30), InputError);
}

TEST_CASE("pattern parser handles common statement formats") {
  auto mdY = Date::try_parse("03/28/2017", "%m/%d/%Y");
  REQUIRE(mdY.has_value());
  CHECK(mdY->to_iso() == "2017-03-28");

  auto dmy = Date::try_parse("28.03.2017", "%d.%m.%Y");
  REQUIRE(dmy.has_value());
  CHECK(dmy->to_iso() == "2017-03-28");

  auto named = Date::try_parse("28 Mar 2017", "%d %b %Y");
  REQUIRE(named.has_value());
  CHECK(named->to_iso() == "2017-03-28");

  auto full_month = Date::try_parse("28 March 2017", "%d %b %Y");
  REQUIRE(full_month.has_value());
  CHECK(full_month->to_iso() == "2017-03-28");

  auto two_digit = Date::try_parse("3/8/17", "%m/%d/%y");
  REQUIRE(two_digit.has_value());
  CHECK(two_digit->to_iso() == "2017-03-08");

  auto old_century = Date::try_parse("3/8/85", "%m/%d/%y");
  REQUIRE(old_century.has_value());
  CHECK(old_century->to_iso() == "1985-03-08");

  CHECK_FALSE(Date::try_parse("2017-03-28", "%m/%d/%Y").has_value());
  CHECK_FALSE(Date::try_parse("13/28/2017", "%m/%d/%Y").has_value());
  CHECK_FALSE(Date::try_parse("03/28/2017 extra", "%m/%d/%Y").has_value());
  CHECK_FALSE(Date::try_parse("Foo 28 2017", "%b %d %Y").has_value());
}

TEST_CASE("weekday and week start follow ISO convention") {
  // 1970-01-01 was a Thursday.
  CHECK(Date::from_ymd(1970, 1, 1).weekday_iso() == 4);
  CHECK(Date::from_ymd(2017, 1, 2).weekday_iso() == 1);  // Monday
  CHECK(Date::from_ymd(2017, 1, 1).weekday_iso() == 7);  // Sunday

  CHECK(Date::from_ymd(2017, 1, 1).week_start().to_iso() == "2016-12-26");
  CHECK(Date::from_ymd(2017, 1, 2).week_start().to_iso() == "2017-01-02");
  CHECK(Date::from_ymd(2017, 1, 8).week_start().to_iso() == "2017-01-02");
  CHECK(Date::from_ymd(2017, 1, 9).week_start().to_iso() == "2017-01-09");
}

TEST_CASE("month boundaries") {
  CHECK(Date::from_ymd(2017, 3, 28).month_start().to_iso() == "2017-03-01");
  CHECK(Date::from_ymd(2017, 3, 28).month_end().to_iso() == "2017-03-31");
  CHECK(Date::from_ymd(2017, 3, 28).next_month_start().to_iso() == "2017-04-01");
  CHECK(Date::from_ymd(2017, 12, 5).next_month_start().to_iso() == "2018-01-01");
  CHECK(Date::from_ymd(2020, 2, 1).month_end().to_iso() == "2020-02-29");
  CHECK(Date::from_ymd(2021, 2, 1).month_end().to_iso() == "2021-02-28");
  CHECK(Date::from_ymd(2017, 3, 28).to_iso_month() == "2017-03");
}

TEST_CASE("date arithmetic and ordering") {
  Date a = Date::from_ymd(2017, 1, 31);
  CHECK(a.plus_days(1).to_iso() == "2017-02-01");
  CHECK(a.plus_days(-31).to_iso() == "2016-12-31");
  CHECK(a.days_until(Date::from_ymd(2017, 3, 1)) == 29);
  CHECK(a < Date::from_ymd(2017, 2, 1));
  CHECK(a == Date::parse_iso("2017-01-31"));
}
