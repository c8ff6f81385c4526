"""Frozen reference values (generated by tools/generate_tables.py)."""

K0_REAL = [
    (1e-8, 18.536612259610778),
    (1e-6, 13.931442073626419),
    (1e-4, 9.3262719134502749),
    (1e-2, 4.721244730161095),
    (0.1, 2.4270690247020166),
    (0.5, 0.92441907122766586),
    (1.0, 0.42102443824070833),
    (1.999, 0.11403383058923292),
    (2.0, 0.11389387274953344),
    (2.001, 0.11375409873668461),
    (3.0, 0.034739504386279248),
    (5.0, 0.0036910983340425943),
    (7.999, 0.00014662615741031238),
    (8.0, 0.00014647070522281539),
    (8.001, 0.00014631541892719126),
    (10.0, 1.7780062316167652e-5),
    (20.0, 5.7412378153365243e-10),
    (50.0, 3.4101677497894955e-23),
    (100.0, 4.656628229175902e-45),
    (200.0, 1.2256819797765335e-88),
    (400.0, 1.199780043200976e-175),
    (700.0, 4.6697764316853769e-306),
]

K1_REAL = [
    (1e-8, 99999999.999999905),
    (1e-6, 999999.99999278428),
    (1e-4, 9999.999508686405),
    (1e-2, 99.973894118296248),
    (0.1, 9.8538447808706061),
    (0.5, 1.6564411200033009),
    (1.0, 0.60190723019723457),
    (1.999, 0.14004984207710968),
    (2.0, 0.13986588181652243),
    (2.001, 0.13968218830176753),
    (3.0, 0.040156431128194184),
    (5.0, 0.0040446134454521642),
    (7.999, 0.00015553519296071064),
    (8.0, 0.00015536921180500113),
    (8.001, 0.00015520340918264723),
    (10.0, 1.8648773453825585e-5),
    (20.0, 5.8830579695570382e-10),
    (50.0, 3.4441022267175556e-23),
    (100.0, 4.6798537356369093e-45),
    (200.0, 1.2287423734729858e-88),
    (400.0, 1.2012788332610326e-175),
    (700.0, 4.6731107967079661e-306),
]

I0_REAL = [
    (1e-8, 1.0),
    (0.1, 1.0025015629340956),
    (1.0, 1.2660658777520083),
    (5.0, 27.239871823604447),
    (10.0, 2815.7166284662545),
    (17.9, 5642579.5600484017),
    (18.1, 6853118.7769630113),
    (50.0, 2.9325537838493363e+20),
    (200.0, 2.0396871734097246e+85),
    (600.0, 6.1463054039368448e+258),
    (700.0, 1.5295933476718737e+302),
]

H0_COMPLEX = [
    (complex(0.3, 0.0), complex(0.97762624653829609, -0.80727357780451947)),
    (complex(0.29401997335237249, 0.059600799238518365), complex(0.841889622631861, -0.81739556701216259)),
    (complex(0.22945265618534653, 0.19326530617130732), complex(0.51951008739489502, -0.84668347585271374)),
    (complex(0.13607883642767322, 0.2673622080184306), complex(0.27659226469529681, -0.86525110661948819)),
    (complex(0.050990142870072282, 0.29563491899653805), complex(0.099772446607157056, -0.87259220781366868)),
    (complex(5.7693965074919254e-18, 0.3), complex(1.122438947939684e-17, -0.8737352113273075)),
    (complex(1.0, 0.0), complex(0.76519768655796655, 0.088256964215676958)),
    (complex(0.98006657784124163, 0.19866933079506122), complex(0.62296678701090959, 0.0032536168538437985)),
    (complex(0.76484218728448843, 0.64421768723769105), complex(0.3535956567773032, -0.16220922279630247)),
    (complex(0.45359612142557739, 0.89120736006143534), complex(0.18319786483210751, -0.23794212199143197)),
    (complex(0.16996714290024094, 0.98544972998846018), complex(0.065574560181049713, -0.26411623205914641)),
    (complex(1.9231321691639751e-17, 1.0), complex(7.3691740774985407e-18, -0.26803248203398855)),
    (complex(2.0, 0.0), complex(0.22389077914123567, 0.51037567264974512)),
    (complex(1.9601331556824833, 0.39733866159012243), complex(0.19351923012529501, 0.31665442105628223)),
    (complex(1.5296843745689769, 1.2884353744753821), complex(0.14004811229998273, 0.05238704586582543)),
    (complex(0.90719224285115478, 1.7824147201228707), complex(0.081504968763361606, -0.0392295383720334)),
    (complex(0.33993428580048188, 1.9708994599769204), complex(0.030305799583734879, -0.068257950865554355)),
    (complex(3.8462643383279503e-17, 2.0), complex(3.4247670700717462e-18, -0.072507091343870252)),
    (complex(5.0, 0.0), complex(-0.1775967713143383, -0.30851762524903378)),
    (complex(4.9003328892062082, 0.99334665397530608), complex(-0.086600626498675469, -0.098603745242740701)),
    (complex(3.8242109364224421, 3.2210884361884553), complex(-0.012494925698382959, 0.0063425169264623708)),
    (complex(2.2679806071278869, 4.4560368003071767), complex(0.0024481835425661278, 0.0032343065673701004)),
    (complex(0.84983571450120469, 4.9272486499423009), complex(0.0020288194126987494, -0.0015078961713706536)),
    (complex(9.6156608458198757e-17, 5.0), complex(2.4759181365840557e-19, -0.0023498261812045551)),
    (complex(8.0, 0.0), complex(0.17165080713755391, 0.22352148938756622)),
    (complex(7.840532622729933, 1.5893546463604897), complex(0.045398504570340958, 0.035023619141331073)),
    (complex(6.1187374982759074, 5.1537414979015284), complex(0.00041461476146272033, -0.0015592411380423604)),
    (complex(3.6287689714046191, 7.1296588804914827), complex(-0.00014636939162762081, 0.00016817966639621566)),
    (complex(1.3597371432019275, 7.8835978399076814), complex(0.00010391866423796037, -1.3378925714996068e-5)),
    (complex(1.5385057353311801e-16, 8.0), complex(1.5217531348804256e-20, -9.3246147017467839e-5)),
    (complex(9.5, 0.0), complex(-0.19392874768742236, 0.17121062620272384)),
    (complex(9.3106324894917955, 1.8873586425530815), complex(-0.020718043181414012, 0.033142942963547695)),
    (complex(7.26600077920264, 6.120068028758065), complex(0.00055684416392593824, -9.1008846202405401e-5)),
    (complex(4.3091631535429852, 8.4664699205836357), complex(-5.3046968743128309e-5, 9.286241272396153e-6)),
    (complex(1.6146878575522889, 9.3617724348903717), complex(2.1797824521427368e-5, 2.7889383920163429e-6)),
    (complex(1.8269755607057764e-16, 9.5), complex(3.6755970843238895e-21, -1.9135443879771104e-5)),
    (complex(12.0, 0.0), complex(0.047689310796833537, -0.22523731263436143)),
    (complex(11.7607989340949, 2.3840319695407346), complex(-0.0027494962915762908, -0.021000265339614239)),
    (complex(9.1781062474138611, 7.7306122468522926), complex(-1.8103141296151541e-5, 9.8829506108592691e-5)),
    (complex(5.4431534571069287, 10.694488320737224), complex(-2.9602327808643093e-6, -4.2441094706387073e-6)),
    (complex(2.0396057148028913, 11.825396759861522), complex(1.4202771701508768e-6, 8.7580271540560482e-7)),
    (complex(2.3077586029967702e-16, 12.0), complex(3.3655001329690681e-22, -1.4010889634572334e-6)),
    (complex(15.0, 0.0), complex(-0.014224472826780773, 0.20546429603891826)),
    (complex(14.700998667618624, 2.9800399619259182), complex(0.0033803675120743448, 0.0098815032862054551)),
    (complex(11.472632809267326, 9.6632653085653658), complex(-8.0328186379375545e-6, -1.0255625777675889e-5)),
    (complex(6.8039418213836608, 13.36811040092153), complex(2.1867381333902307e-7, -2.3351836741786813e-7)),
    (complex(2.5495071435036141, 14.781745949826903), complex(3.7830332307319543e-8, 6.7947185810284009e-8)),
    (complex(2.8846982537459627e-16, 15.0), complex(1.8624839200261809e-23, -6.2513110801783786e-8)),
    (complex(18.0, 0.0), complex(-0.013355805721984111, -0.18755215961141061)),
    (complex(17.641198401142349, 3.5760479543111019), complex(-0.0026551338187421611, -0.0045348947001746727)),
    (complex(13.767159371120792, 11.595918370278439), complex(1.719958675383726e-6, 1.0377624081598541e-7)),
    (complex(8.164730185660393, 16.041732481105836), complex(1.7272186679492953e-8, 1.0427381182458668e-8)),
    (complex(3.0594085722043369, 17.738095139792283), complex(-7.7394500736219548e-12, 3.6969959498261803e-9)),
    (complex(3.4616379044951553e-16, 18.0), complex(1.0117953212186315e-24, -2.8448967323647688e-9)),
    (complex(18.9, 0.0), complex(0.13531521052232478, -0.12394211349003008)),
    (complex(18.523258321199467, 3.754850352026657), complex(0.0014815524650379343, -0.004025032272535775)),
    (complex(14.455517339676831, 12.175714288792361), complex(6.8990899285598144e-7, 6.4124596676580953e-7)),
    (complex(8.5729666949434126, 16.843819105161128), complex(5.1260160207911612e-9, 7.1911457598573431e-9)),
    (complex(3.2123790008145537, 18.624999896781897), complex(-2.296794794566213e-10, 1.4688125396123076e-9)),
    (complex(3.634719799719913e-16, 18.9), complex(4.2112718377988539e-25, -1.129128176502273e-9)),
    (complex(19.1, 0.0), complex(0.15642304533360808, -0.094081562959872534)),
    (complex(18.719271636767715, 3.7945842181856692), complex(0.0021389355929480738, -0.0034983128605835086)),
    (complex(14.608485777133729, 12.304557826239899), complex(5.1082361167727752e-7, 6.4620376367440441e-7)),
    (complex(8.6636859192285281, 17.022060577173415), complex(3.7068639960610238e-9, 6.3479417322253994e-9)),
    (complex(3.2463724293946019, 18.822089842779589), complex(-2.2829814690703529e-10, 1.192741483445927e-9)),
    (complex(3.6731824431031925e-16, 19.1), complex(3.4654080421484974e-25, -9.1965974749816678e-10)),
    (complex(25.0, 0.0), complex(0.096266783275958116, -0.12724943226800614)),
    (complex(24.501664446031041, 4.9667332698765304), complex(5.4901003144181204e-5, -0.0011090302686755793)),
    (complex(19.121054682112211, 16.105442180942276), complex(1.0416504101876271e-8, -1.2287666366669878e-8)),
    (complex(11.339903035639435, 22.280184001535883), complex(-2.8057236814634094e-11, -1.8283563245359752e-11)),
    (complex(4.2491785725060235, 24.636243249711505), complex(-2.9483640294196265e-12, 1.172934636083383e-12)),
    (complex(4.8078304229099379e-16, 25.0), complex(1.0812985495310222e-27, -2.2053537451806378e-12)),
    (complex(40.0, 0.0), complex(0.0073668905842372896, 0.12593641705826093)),
    (complex(39.202663113649665, 7.9467732318024486), complex(3.6429588739200935e-5, 2.5739216535475202e-5)),
    (complex(30.593687491379537, 25.768707489507642), complex(-3.075892034207145e-13, -7.5001282799471009e-13)),
    (complex(18.143844857023096, 35.648294402457414), complex(-1.8849171985368954e-17, -3.6951472362531741e-17)),
    (complex(6.7986857160096375, 39.417989199538407), complex(5.4024126276155819e-19, -7.8902485330352125e-19)),
    (complex(7.6925286766559006e-16, 40.0), complex(4.1612289331914495e-34, -5.3430613230581147e-19)),
    (complex(80.0, 0.0), complex(-0.069742165512210023, -0.05562033908977)),
    (complex(78.40532622729933, 15.893546463604897), complex(-5.8288071270090675e-9, 9.520254175803597e-9)),
    (complex(61.187374982759074, 51.537414979015284), complex(-3.4568729536156936e-24, -1.3032725030004758e-24)),
    (complex(36.287689714046191, 71.296588804914827), complex(-8.9422271915708132e-33, -3.7183769085721401e-33)),
    (complex(13.597371432019275, 78.835978399076814), complex(4.6256709998958537e-36, -2.2610977771753991e-36)),
    (complex(1.5385057353311801e-15, 80.0), complex(2.4886212442970088e-51, -1.6075412193366963e-36)),
    (complex(150.0, 0.0), complex(-0.00077409037539429125, -0.065142221509037355)),
    (complex(147.00998667618624, 29.800399619259182), complex(-2.9546578643085443e-16, 7.4358347207585398e-15)),
    (complex(114.72632809267326, 96.632653085653658), complex(6.1883869717958098e-44, 3.3243766559369598e-44)),
    (complex(68.039418213836608, 133.6811040092153), complex(-4.253902566695252e-60, -3.808413328491384e-60)),
    (complex(25.495071435036141, 147.81745949826903), complex(1.7927149051437661e-66, -3.7341749033054185e-66)),
    (complex(2.8846982537459627e-15, 150.0), complex(1.3517758275494373e-81, -4.6704790945602821e-67)),
    (complex(300.0, 0.0), complex(-0.033298554876305668, -0.031831889730003398)),
    (complex(294.01997335237249, 59.600799238518365), complex(-3.4183462491133068e-28, -4.9460471347446773e-28)),
    (complex(229.45265618534653, 193.26530617130732), complex(-2.8086013992344645e-86, 4.5658423358986166e-86)),
    (complex(136.07883642767322, 267.3622080184306), complex(-3.3333014958723397e-118, 1.1987788838315073e-118)),
    (complex(50.990142870072282, 295.63491899653805), complex(1.3504958212272512e-130, -1.285660140544076e-130)),
    (complex(5.7693965074919254e-15, 300.0), complex(1.3699578851371492e-146, -2.3705777708858602e-132)),
]

J0_COMPLEX = [
    (complex(0.3, 0.0), complex(0.97762624653829609, 0.0)),
    (complex(0.29401997335237249, 0.059600799238518365), complex(0.97936418991275283, -0.0086714167802896049)),
    (complex(0.22945265618534653, 0.19326530617130732), complex(0.99605664473612483, -0.022129946496107132)),
    (complex(0.13607883642767322, 0.2673622080184306), complex(1.0132020773014632, -0.01831170453639464)),
    (complex(0.050990142870072282, 0.29563491899653805), complex(1.0212983246179909, -0.0076173988988777482)),
    (complex(5.7693965074919254e-18, 0.3), complex(1.022626879351597, -8.7518191072476711e-19)),
    (complex(1.0, 0.0), complex(0.76519768655796655, 0.0)),
    (complex(0.98006657784124163, 0.19866933079506122), complex(0.78046335035670053, -0.086543710066177865)),
    (complex(0.76484218728448843, 0.64421768723769105), complex(0.94300398528995038, -0.24075427975754899)),
    (complex(0.45359612142557739, 0.89120736006143534), complex(1.1419052753853125, -0.21712406614725216)),
    (complex(0.16996714290024094, 0.98544972998846018), complex(1.2479005549424924, -0.093988206494169386)),
    (complex(1.9231321691639751e-17, 1.0), complex(1.2660658777520083, -1.0868756535838363e-17)),
    (complex(2.0, 0.0), complex(0.22389077914123567, 0.0)),
    (complex(1.9601331556824833, 0.39733866159012243), complex(0.24302700966890464, -0.23429577925346566)),
    (complex(1.5296843745689769, 1.2884353744753821), complex(0.60938877732852613, -0.87863216506356684)),
    (complex(0.90719224285115478, 1.7824147201228707), complex(1.4838656873154205, -1.0539647944599803)),
    (complex(0.33993428580048188, 1.9708994599769204), complex(2.1508805204726603, -0.51831416091487304)),
    (complex(3.8462643383279503e-17, 2.0), complex(2.2795853023360673, -6.1180098092216985e-17)),
    (complex(5.0, 0.0), complex(-0.1775967713143383, 0.0)),
    (complex(4.9003328892062082, 0.99334665397530608), complex(-0.28430064995202002, 0.36924429400905857)),
    (complex(3.8242109364224421, 3.2210884361884553), complex(-4.4295125135678038, 1.0179042292332127)),
    (complex(2.2679806071278869, 4.4560368003071767), complex(-6.8119210488105851, -14.184916387744405)),
    (complex(0.84983571450120469, 4.9272486499423009), complex(18.36652299539919, -17.416624300098027)),
    (complex(9.6156608458198757e-17, 5.0), complex(27.239871823604447, -2.3400328130704565e-15)),
    (complex(8.0, 0.0), complex(0.17165080713755391, 0.0)),
    (complex(7.840532622729933, 1.5893546463604897), complex(0.47654722754327486, -0.50580724538998977)),
    (complex(6.1187374982759074, 5.1537414979015284), complex(20.166255338753749, 14.178085688104013)),
    (complex(3.6287689714046191, 7.1296588804914827), complex(-173.38238281497973, 43.118919337306629)),
    (complex(1.3597371432019275, 7.8835978399076814), complex(112.2626675442337, -363.52448652972476)),
    (complex(1.5385057353311801e-16, 8.0), complex(427.56411572180479, -6.1520711434483819e-14)),
    (complex(9.5, 0.0), complex(-0.19392874768742236, 0.0)),
    (complex(9.3106324894917955, 1.8873586425530815), complex(-0.59905073153900116, -0.6051001124116894)),
    (complex(7.26600077920264, 6.120068028758065), complex(51.023477439677042, -30.352299502149596)),
    (complex(4.3091631535429852, 8.4664699205836357), complex(-374.47121464740751, 497.48916381058735)),
    (complex(1.6146878575522889, 9.3617724348903717), complex(67.189902101073905, -1525.2532191691502)),
    (complex(1.8269755607057764e-16, 9.5), complex(1753.4809905273227, -3.0299532416852352e-13)),
    (complex(12.0, 0.0), complex(0.047689310796833537, 0.0)),
    (complex(11.7607989340949, 2.3840319695407346), complex(0.085508211720820915, 1.2379173173273432)),
    (complex(9.1781062474138611, 7.7306122468522926), complex(-203.50179164777608, -168.12199208708951)),
    (complex(5.4431534571069287, 10.694488320737224), complex(2414.8968064833331, 4524.7640836559168)),
    (complex(2.0396057148028913, 11.825396759861522), complex(-5923.178595518027, -14766.540032686136)),
    (complex(2.3077586029967702e-16, 12.0), complex(18948.925349296309, -4.1865853720791989e-12)),
    (complex(15.0, 0.0), complex(-0.014224472826780773, 0.0)),
    (complex(14.700998667618624, 2.9800399619259182), complex(0.26460783762108948, -2.0088437066776444)),
    (complex(11.472632809267326, 9.6632653085653658), complex(57.00345972697701, 1627.8111909587358)),
    (complex(6.8039418213836608, 13.36811040092153), complex(63744.092530669445, -18421.896673235811)),
    (complex(2.5495071435036141, 14.781745949826903), complex(-212458.32228354614, -171457.17027516735)),
    (complex(2.8846982537459627e-16, 15.0), complex(339649.37329791388, -9.4654138941798467e-11)),
    (complex(18.0, 0.0), complex(-0.013355805721984111, 0.0)),
    (complex(17.641198401142349, 3.5760479543111019), complex(-1.0908576436510662, 3.1803692681559493)),
    (complex(13.767159371120792, 11.595918370278439), complex(7439.2463178939827, -7068.9987971860363)),
    (complex(8.164730185660393, 16.041732481105836), complex(-63095.712887692251, -874419.3252861098)),
    (complex(3.0594085722043369, 17.738095139792283), complex(-4717010.8530159612, -804043.09424468204)),
    (complex(3.4616379044951553e-16, 18.0), complex(6218412.4207810029, -2.0919139092822158e-9)),
    (complex(18.9, 0.0), complex(0.13531521052232478, 0.0)),
    (complex(18.523258321199467, 3.754850352026657), complex(2.0610759017330558, 3.3392612170628731)),
    (complex(14.455517339676831, 12.175714288792361), complex(2180.9316181296551, -17746.105507757372)),
    (complex(8.5729666949434126, 16.843819105161128), complex(-881574.57123437485, -1691549.1795531611)),
    (complex(3.2123790008145537, 18.624999896781897), complex(-11330933.803729041, -179042.03642334221)),
    (complex(3.634719799719913e-16, 18.9), complex(14920993.958327751, -5.2778804008352379e-9)),
    (complex(19.1, 0.0), complex(0.15642304533360808, 0.0)),
    (complex(18.719271636767715, 3.7945842181856692), complex(2.7665747488822664, 2.9749152675074493)),
    (complex(14.608485777133729, 12.304557826239899), complex(-621.83133586619128, -20221.075404569316)),
    (complex(8.6636859192285281, 17.022060577173415), complex(-1225914.0014195258, -1907599.8140191627)),
    (complex(3.2463724293946019, 18.822089842779589), complex(-13725430.18618935, 249922.88601482186)),
    (complex(3.6731824431031925e-16, 19.1), complex(18127547.965619139, -6.4818587563792345e-9)),
    (complex(25.0, 0.0), complex(0.096266783275958116, 0.0)),
    (complex(24.501664446031041, 4.9667332698765304), complex(2.8295678155611902, 11.109288906052659)),
    (complex(19.121054682112211, 16.105442180942276), complex(779273.14581273454, 132022.65969890184)),
    (complex(11.339903035639435, 22.280184001535883), complex(40448703.399441091, 378086230.13380383)),
    (complex(4.2491785725060235, 24.636243249711505), complex(-2095995665.1294985, 3422539967.8960164)),
    (complex(4.8078304229099379e-16, 25.0), complex(5774560606.4663103, -2.7202056100152107e-6)),
    (complex(40.0, 0.0), complex(0.0073668905842372896, 0.0)),
    (complex(39.202663113649665, 7.9467732318024486), complex(122.34307890153177, -129.82918663989007)),
    (complex(30.593687491379537, 25.768707489507642), complex(3001444849.1525616, 9346434828.9633482)),
    (complex(18.143844857023096, 35.648294402457414), complex(112752744789424.33, 155217455104679.97)),
    (complex(6.7986857160096375, 39.417989199538407), complex(7566319560261042.7, -3466021613210917.3)),
    (complex(7.6925286766559006e-16, 40.0), complex(14894774793419900.0, -11.313706674481154)),
    (complex(80.0, 0.0), complex(-0.069742165512210023, 0.0)),
    (complex(78.40532622729933, 15.893546463604897), complex(-242793.62207527047, -260948.88247962103)),
    (complex(61.187374982759074, 51.537414979015284), complex(-5.2603529519711545e+20, 9.3979762171959809e+20)),
    (complex(36.287689714046191, 71.296588804914827), complex(-3.1498293287083095e+28, 4.0964472374751902e+29)),
    (complex(13.597371432019275, 78.835978399076814), complex(4.5245418577664049e+32, -6.2650467022599034e+32)),
    (complex(1.5385057353311801e-15, 80.0), complex(2.4751784043341705e+33, -3.7842003701269408e+18)),
    (complex(150.0, 0.0), complex(-0.00077409037539429125, 0.0)),
    (complex(147.00998667618624, 29.800399619259182), complex(-67702932314.905919, -277003499929.4119)),
    (complex(114.72632809267326, 96.632653085653658), complex(1.1144289548609121e+40, -2.8077435728983234e+40)),
    (complex(68.039418213836608, 133.6811040092153), complex(9.5331910038105739e+55, 3.5923232230879213e+56)),
    (complex(25.495071435036141, 147.81745949826903), complex(4.92806215301044e+62, -1.3999713488724766e+62)),
    (complex(2.8846982537459627e-15, 150.0), complex(4.543597466270579e+63, -1.3063144677696924e+49)),
    (complex(300.0, 0.0), complex(-0.033298554876305668, 0.0)),
    (complex(294.01997335237249, 59.600799238518365), complex(-6.9493372861618977e+23, 1.6221626838291352e+24)),
    (complex(229.45265618534653, 193.26530617130732), complex(-1.8792862545476749e+82, -6.2136816810760509e+81)),
    (complex(136.07883642767322, 267.3622080184306), complex(-2.1818857964899215e+114, 2.0521418453702982e+114)),
    (complex(50.990142870072282, 295.63491899653805), complex(4.5669846441697217e+126, -3.3945822211542458e+126)),
    (complex(5.7693965074919254e-15, 300.0), complex(4.4758473679350521e+128, -2.5779863956974137e+114)),
]

# (l, x, exp(-x)*i_l(x), exp(x)*k_l(x))
SPH_SCALED = [
    (0, 1e-4, 0.99990000666633335, 10000.0),
    (0, 0.1, 0.90634623461009071, 10.0),
    (0, 0.5, 0.63212055882855768, 2.0),
    (0, 1.0, 0.43233235838169365, 1.0),
    (0, 5.0, 0.099995460007023752, 0.2),
    (0, 10.0, 0.049999999896942319, 0.1),
    (0, 50.0, 0.01, 0.02),
    (0, 200.0, 0.0025, 0.005),
    (0, 600.0, 0.00083333333333333333, 0.0016666666666666667),
    (1, 1e-4, 3.3330000199991111e-5, 100010000.0),
    (1, 0.1, 0.030191419289002227, 110.0),
    (1, 0.5, 0.10363832351432696, 6.0),
    (1, 1.0, 0.13533528323661269, 2.0),
    (1, 5.0, 0.080005447991571498, 0.24),
    (1, 10.0, 0.045000000113363449, 0.11),
    (1, 50.0, 0.0098, 0.0204),
    (1, 200.0, 0.0024875, 0.005025),
    (1, 600.0, 0.00083194444444444444, 0.0016694444444444444),
    (2, 1e-4, 6.6660000380936508e-10, 3000300010000.0),
    (2, 0.1, 0.00060365594002390126, 3310.0),
    (2, 0.5, 0.01029061774259589, 38.0),
    (2, 1.0, 0.026326508671855578, 7.0),
    (2, 5.0, 0.051992191212080853, 0.344),
    (2, 10.0, 0.036499999862933284, 0.133),
    (2, 50.0, 0.009412, 0.021224),
    (2, 200.0, 0.0024626875, 0.005075375),
    (2, 600.0, 0.00082917361111111111, 0.0016750138888888889),
    (3, 1e-4, 9.5228571957650794e-15, 1.5001500060001e+17),
    (3, 0.1, 8.6222878071640098e-6, 165610.0),
    (3, 0.5, 0.00073214608836806794, 386.0),
    (3, 1.0, 0.0037027398773348, 37.0),
    (3, 5.0, 0.028013256779490646, 0.584),
    (3, 10.0, 0.026750000181896807, 0.1765),
    (3, 50.0, 0.0088588, 0.0225224),
    (3, 200.0, 0.0024259328125, 0.005151884375),
    (3, 600.0, 0.00082503466435185185, 0.0016834028935185185),
    (5, 1e-4, 9.6190476708456976e-25, 9.45094504200105e+26),
    (5, 0.1, 8.7078931258835723e-10, 1043806510.0),
    (5, 0.5, 1.8409903951734993e-6, 98342.0),
    (5, 1.0, 3.6774102726997156e-5, 2431.0),
    (5, 5.0, 0.0050207196820615377, 2.67488),
    (5, 10.0, 0.01075250041985184, 0.407395),
    (5, 50.0, 0.00738788176, 0.02691028448),
    (5, 200.0, 0.0023189327191796875, 0.005388390467890625),
    (5, 600.0, 0.00081274144125144676, 0.0017088226973582176),
    (10, 1e-4, 7.2723646743080637e-51, 6.5479455100894014e+52),
    (10, 0.1, 6.5823965249550853e-21, 7.2339714313625391e+19),
    (10, 0.5, 4.3314336243215914e-14, 2196254804262.0),
    (10, 1.0, 2.7343719371837065e-11, 1733584106.0),
    (10, 5.0, 8.14896542424302e-6, 1054.633307136),
    (10, 10.0, 0.00024808980724992776, 13.89294802325),
    (10, 50.0, 0.0033055012703065933, 0.059215763689624643),
    (10, 200.0, 0.0018977399804731617, 0.0065777437150933298),
    (10, 600.0, 0.000760284636300183, 0.0018265221720383915),
    (20, 1e-4, 7.6252164460069305e-106, 3.1986297142975523e+107),
    (20, 0.1, 6.9010735544708071e-46, 3.534225919444817e+44),
    (20, 0.5, 4.4239565559456591e-32, 1.1023153089886502e+30),
    (20, 1.0, 2.8382441747915586e-26, 8.5831967792420372e+23),
    (20, 5.0, 6.5413784733448609e-14, 72444141778.986483),
    (20, 10.0, 1.0766791183609912e-9, 2035714.0645843897),
    (20, 50.0, 0.00015245425338401933, 1.2138216904626196),
    (20, 200.0, 0.00087335099818667152, 0.014238129875442846),
    (20, 600.0, 0.00058708860555561289, 0.002364343977091567),
    (40, 1e-4, 1.5473505866634178e-221, 7.9785920002326366e+222),
    (40, 0.1, 1.4003250809522882e-101, 8.8162681108563868e+99),
    (40, 0.5, 8.549468808557905e-74, 2.8878373579646793e+71),
    (40, 1.0, 5.727349921996526e-62, 2.1549085103884578e+59),
    (40, 5.0, 1.1021744995520402e-35, 2.2233508366611394e+32),
    (40, 10.0, 1.2778790096174948e-25, 9.379243042769461e+21),
    (40, 50.0, 1.4174494659053462e-9, 109640.59036579022),
    (40, 200.0, 4.1587135858360273e-5, 0.29459497799619169),
    (40, 600.0, 0.00021233112820770594, 0.0065262972762577721),
    (60, 1e-4, 1.1850916612158571e-341, 6.973690795720435e+342),
    (60, 0.1, 1.0724661109996577e-161, 7.7060257966317847e+159),
    (60, 0.5, 6.2415110466763659e-120, 2.6481345457844326e+117),
    (60, 1.0, 4.3779042329568676e-102, 1.8875090329572357e+99),
    (60, 5.0, 7.6669571167684996e-62, 2.1485382610913332e+58),
    (60, 10.0, 8.0690748905929819e-46, 1.0105002216954982e+42),
    (60, 50.0, 2.5801598436084708e-17, 4937955501710.9613),
    (60, 200.0, 2.7803286725970331e-7, 43.032980108243146),
    (60, 600.0, 3.9467473774640633e-5, 0.03501318744116499),
]

CIRCLE_EIGS_K1_R1 = [
    0.53304467495626862,
    0.34017335090486752,
    0.22056809423656626,
    0.15742381179815222,
    0.12106943984074957,
    0.097987500829242125,
    0.082169932887639981,
]

ELLIPSE_2_1_PERIMETER = 9.6884482205476762
