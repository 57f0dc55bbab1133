#include "tcnet/golden.hpp"

namespace tcnet::golden {

const std::vector<TcTableData>& tc_tables() {
  static const std::vector<TcTableData> tables = {
      {2,
       {
        {2, {"1", "2"}},
        {3, {"3", "21", "42"}},
        {4, {"15", "228", "1272", "2544"}},
        {5, {"105", "2805", "30300", "154500", "309000"}},
        {6, {"945", "39330", "696600", "6494400", "31534200", "63068400"}},
        {7, {"10395", "623385", "16418430", "241204950", "2068516800", "9737380800", "19474761600"}},
        {8, {"135135", "11055240", "405755280", "8609378400", "113376463200", "920900131200", "4242782275200", "8485564550400"}},
       }},
      {3,
       {
        {2, {"1", "2"}},
        {3, {"3", "33", "150"}},
        {4, {"15", "492", "7908", "55320"}},
        {5, {"105", "7725", "291420", "6179940", "57939000"}},
        {6, {"945", "132030", "9603270", "430105320", "11292075000", "132120450000"}},
        {7, {"10395", "2471805", "307525050", "24586633890", "1284266876760", "40079165452200", "560319972030000"}},
       }},
      {4,
       {
        {2, {"1", "2"}},
        {3, {"3", "48", "546"}},
        {4, {"15", "942", "45132", "1243704"}},
        {5, {"105", "18375", "2394360", "227116260", "11351644920"}},
        {6, {"945", "375705", "107314200", "23919407460", "3724353682560", "291451508298720"}},
       }},
      {5,
       {
        {2, {"1", "2"}},
        {3, {"3", "66", "2016"}},
        {4, {"15", "1650", "242496", "28710864"}},
        {5, {"105", "39135", "17566470", "7876446840", "2307919133520"}},
       }},
      {6,
       {
        {2, {"1", "2"}},
        {3, {"3", "87", "7524"}},
        {4, {"15", "2700", "1246740", "676431360"}},
        {5, {"105", "76515", "118491090", "262058953860", "483098464854720"}},
       }},
  };
  return tables;
}

const std::vector<Table1Row>& table1() {
  static const std::vector<Table1Row> rows = {
      {2, "-5/3", 0.48, "12"},
      {3, "-3", 0.63, "32"},
      {4, "-22/5", 0.71, "250/3"},
      {5, "-35/6", 0.76, "216"},
      {6, "-51/7", 0.80, "16807/30"},
      {7, "-35/4", 0.83, "65536/45"},
      {8, "-92/9", 0.85, "531441/140"},
  };
  return rows;
}

}  // namespace tcnet::golden
