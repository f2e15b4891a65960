#pragma once
// Generated by tests/oracles/freeze.py from exact moments; do not edit.
namespace oracle {
// Gamma(1/4)
inline constexpr long double gamma_quarter[] = {3.62560990822190831193068515587L};
// a_n^2, n = 0..20 (a_0^2 = 0)
inline constexpr long double a_sq[] = {0.0L, 0.337989120033642364497723842335L, 0.401679659763517358579981497097L, 0.505104232344822297818470165921L, 0.578058150331711321096330491768L, 0.646767382047244970383890519092L, 0.707863150905152461544312187719L, 0.764423126052077323407794275331L, 0.817021752010981945203428329488L, 0.866470364190022297994288864714L, 0.913249899440007472800884871816L, 0.957756084884178989098780166881L, 1.00028874655977994832296167596L, 1.04108917892822705402219360523L, 1.0803527252385584740902310355L, 1.11824076449788252835662277045L, 1.15488826397501645758930905347L, 1.19040950142122024440817618225L, 1.22490223294547636881614683704L, 1.25845085579449454244808719604L, 1.29112882934907096515395008423L};
// ||F_n||^2, n = 0..10
inline constexpr long double norm_sq[] = {1.81280495411095415596534257793L, 0.612708351232588822564549151681L, 0.246112482057371969847941376872L, 0.124312456320067720353201598397L, 0.0718598285635700034167486049246L, 0.0464765931944240071558588649527L, 0.0328990677019419428750953147748L, 0.0251488081769173916316227378271L, 0.020547123317693156103468984963L, 0.0178034734241388881992816832443L, 0.0162590203142776851583993576L};
// F_7 and derivatives at x = 0.6
inline constexpr long double F7_at_0p6[] = {0.0423955224791259400196113782113L, 0.642852185094524516990345553736L, -0.763448904883045105880018356809L, -25.2550632556074489875915692646L};
// F_10 and derivatives at x = -1.3
inline constexpr long double F10_at_m1p3[] = {-0.0243531282707058909917235122946L, 3.727006169815868617833159832L, -32.638412475642841085554228794L, -50.0966316207478058741635206811L};
// zeros of F_9
inline constexpr long double F9_zeros[] = {-1.53835438209905399653093598336L, -1.20566605106253290357022961825L, -0.855560291636926006723913515133L, -0.454706860796275801860564766238L, 0.0L, 0.454706860796275801860564766238L, 0.855560291636926006723913515133L, 1.20566605106253290357022961825L, 1.53835438209905399653093598336L};
// K_6(0.4, -0.7)
inline constexpr long double kernel_6_0p4_m0p7[] = {-0.0533061610083194197859796481711L};
// K_n(0,0), n = 0..10
inline constexpr long double kernel_00[] = {0.551631325660418628719891079977L, 0.551631325660418628719891079977L, 1.0157956959766136524467747058L, 1.0157956959766136524467747058L, 1.42138013037277701561365276227L, 1.42138013037277701561365276227L, 1.79195851476542299104386529539L, 1.79195851476542299104386529539L, 2.13867962267657087699841672289L, 2.13867962267657087699841672289L, 2.46764058377643632461076932002L};
// K^{(1,1)}_n(0,0), n = 0..10
inline constexpr long double kernel_11[] = {0.0L, 1.6320978781965259621541718947L, 1.6320978781965259621541718947L, 6.03318462366291235557459456265L, 6.03318462366291235557459456265L, 13.7349643178022046473302006996L, 13.7349643178022046473302006996L, 25.0704987773112652633802845451L, 25.0704987773112652633802845451L, 40.295504624871742533896250391L, 40.295504624871742533896250391L};
// K^{(0,1)}_9(0.8, 0)
inline constexpr long double kernel01_9_at_0p8[] = {-3.72350199330629894484978070491L};
// Q_n(0.7) for M0 = 1, M1 = 0.5, n = 0..12
inline constexpr long double Q_at_0p7[] = {1.0L, 0.7L, 0.272171760492277676035210320887L, 0.057893065538694522566235482876L, -0.228157297176092204906166778956L, -0.200893285065603744747513625839L, 0.0959973878160843080715753219827L, 0.15580276817601958234035203658L, 0.00531114208192271015239875995845L, -0.0790119359643468213803987194919L, -0.0648239498595783822431121101471L, 0.00402731056241708695911649154502L, 0.0857068971779656558256357265129L};
// Q_n'(-1.1), same masses
inline constexpr long double Qd_at_m1p1[] = {0.0L, 1.0L, -2.2L, 3.22270437934099217509462211839L, -2.84137503296898601013227758854L, 2.46120057722491400611010577392L, 0.255342254760595627408917462917L, -1.5750179715715183276350456034L, 1.77843944410042477882248840323L, -1.16240937467678986034094129654L, -0.991597322317257632707569547095L, 2.02240242737702163910903333177L, -1.09493757997257961112179010346L};
// ||Q_n||_1^2, same masses
inline constexpr long double Q_norm_sq[] = {2.81280495411095415596534257793L, 1.11270835123258882256454915168L, 0.319736057047064528360571835072L, 0.274944383694855299040453322312L, 0.0863182520942545008864066351071L, 0.091035818269767875878602408171L, 0.0379340819089565960478639645098L, 0.0432661153374110649023320675903L, 0.0230987806304437762122309699129L, 0.0278165134208967364277084968313L, 0.0179631072527737888800446083399L, 0.0226879080747788694532711702349L, 0.0169915354061300328936240885114L};
// lambda_{n,n}, same masses, n = 0..10
inline constexpr long double lambda_nn[] = {0.217828239507722323964789679113L, 0.407295620659007824905377881606L, 0.910637654597284035065993235186L, 0.972388779194020587731297428868L, 1.23279824247101560658886014408L, 1.36096752381734500667269819834L, 1.47915832951734360566937565195L, 1.60993794942171691785909697271L, 1.68923792808336792608324714123L, 1.80873153135231969876111638954L, 1.87586410274739671406619032774L};
// lambda_{n,n-2}, same masses, n = 0..10
inline constexpr long double lambda_nm2[] = {0.0L, 0.0L, 0.113671606195006790804301196498L, 0.247094742652276385930593303097L, 0.26996721261733899893484130019L, 0.331106302468804780283371980802L, 0.439467679066702941363135405976L, 0.475264749191355681925144273981L, 0.608918931684753264457779362469L, 0.642916823106708020806811328243L, 0.777664740843451170823449771722L};
// M0 = 0, M1 = 0, 0.2, 0.4, 1: eta_5_2, eta_4_2, eta_5_3, eta_4_3, eta_5_4 per row
inline constexpr long double table1[] = {-0.655248174922544123237211156327L, -0.396150056694515026410320496405L, 0.0L, 0.396150056694515026410320496405L, 0.655248174922544123237211156327L, -0.458454561810261996216641258026L, -0.396150056694515026410320496405L, 0.0L, 0.396150056694515026410320496405L, 0.458454561810261996216641258026L, -0.37189796084771911455810975613L, -0.396150056694515026410320496405L, 0.0L, 0.396150056694515026410320496405L, 0.37189796084771911455810975613L, -0.261022831454378907330874584883L, -0.396150056694515026410320496405L, 0.0L, 0.396150056694515026410320496405L, 0.261022831454378907330874584883L};
// M0 = 1, M1 = 0, 0.4, 0.9, 2: same layout
inline constexpr long double table2[] = {-0.655248174922544123237211156327L, -0.284325421033103647475020478556L, 0.0L, 0.284325421033103647475020478556L, 0.655248174922544123237211156327L, -0.37189796084771911455810975613L, -0.284325421033103647475020478556L, 0.0L, 0.284325421033103647475020478556L, 0.37189796084771911455810975613L, -0.272822497291976763088788811408L, -0.284325421033103647475020478556L, 0.0L, 0.284325421033103647475020478556L, 0.272822497291976763088788811408L, -0.192081395125735099339032667412L, -0.284325421033103647475020478556L, 0.0L, 0.284325421033103647475020478556L, 0.192081395125735099339032667412L};
// M1 = 0.1, 1, 10 and odd n = 1..19: real root, imaginary root per cell
inline constexpr long double table3[] = {0.369163608304660791366248711015L, 0.878730752776995129081782800566L, 0.397067093767772017888541648516L, 1.05951663095167126646849501437L, 0.329766168592686231090964329097L, 1.18145148028381735577101179935L, 0.251172012417540922007760877663L, 1.27237499128266302242691225113L, 0.189032311960959035651249177186L, 1.34597738678620936437602800206L, 0.144417601973939612986864419524L, 1.40881299298302471256732592838L, 0.112808671818198544309882874999L, 1.46418376485950331648254813047L, 0.0901057000710091781839825205434L, 1.51396345386176349434284846859L, 0.0734432323595736113205717409751L, 1.55934188633851386531836719703L, 0.0609330781265650977404329258979L, 1.60113870965794650682705240656L, 0.745497001104751748130733982693L, 0.914759257867102115990148014322L, 0.387740489694774462110747203347L, 1.08903644800246592339146112698L, 0.197205503788527392466131692621L, 1.19717211588478830941986487366L, 0.116257300363773346603825689566L, 1.27962343237571632231976032016L, 0.0763175511349212609744376551998L, 1.34945647218332400558322919265L, 0.0539430589090861273697285936851L, 1.41061658565584396319658700199L, 0.0401924620936896222458052458314L, 1.46519190579489247718709266466L, 0.0311432604631039422683445559167L, 1.51456478756919512722124383938L, 0.0248695581184083064102923320788L, 1.55972055472268895884200717329L, 0.0203389389685919654308276818108L, 1.60138815541634614256528398504L, 0.905303124533343971829166185935L, 0.928588920716960005796513090644L, 0.159258423639828483024083198352L, 1.10682497271901633485446795697L, 0.0686853476513232576352001186313L, 1.20124069332896985697308982681L, 0.038575922125756486138792194919L, 1.28085622604400450720535840941L, 0.0248246729917268181537835132827L, 1.34993668531819608646972216924L, 0.0173739999624892589375938968007L, 1.41083927351686669683386208791L, 0.0128733184400487246828980005729L, 1.46530862940924618971335715484L, 0.00994087939476164877735866003668L, 1.51463170054493388764994929141L, 0.00792057025558965295484714597658L, 1.55976161122180664691781660621L, 0.00646767281819650608013593634113L, 1.60141472463127143908658624888L};
// positive zeros of J_7
inline constexpr long double J7_zeros[] = {0.920416366546388784130694429542L, 1.35273061477986201776469109515L};
// lim M1 K11_5(0,0) |eta_k^2 - y_k^2| for Q_7, k = 1..3 (y_1 = 0)
inline constexpr long double m1_constants[] = {0.344420031218532014639826299041L, 0.0908604468452693097904824545988L, 0.0651348133930932524262319649735L};
}  // namespace oracle
