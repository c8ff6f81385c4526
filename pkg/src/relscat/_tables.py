"""Frozen coefficient tables (generated by tools/generate_tables.py)."""

import numpy as np

CHEB_K0_MID = np.array([
    2.4386399918164035, 0.02034389480658258, -0.006134672766855444, 0.0018625219945277406,
    -0.0005688810640047938, 0.00017468684312321012, -5.389749969209643e-05, 1.6700638391692278e-05,
    -5.19480544723605e-06, 1.6215023797436317e-06, -5.077371915992342e-07, 1.594453577393425e-07,
    -5.020298189022074e-08, 1.584519831791365e-08, -5.012252466236237e-09, 1.588770242187755e-09,
    -5.045636215734646e-10, 1.6052332248746123e-10, -5.115338819115508e-11, 1.632588250188618e-11,
    -5.217968547536116e-12, 1.669972612816703e-12, -5.351363851829134e-13, 1.7168570956765182e-13,
    -5.514275359589949e-14, 1.7729642631177956e-14, -5.706155126892783e-15, 1.8382139347988784e-15,
    -5.927015256202712e-16, 1.9126864836523987e-16, -6.177332623684968e-17, 1.9965981417879813e-17,
    -6.457985087106029e-18, 2.0902846151690035e-18, -6.770209773814692e-19, 2.1941906072371115e-19,
])

CHEB_K1_MID = np.array([
    2.723626137075501, -0.06818083354401996, 0.021533381163809654, -0.0068310320191212635,
    0.002175320364204524, -0.0006950358279782931, 0.00022271980254783585, -7.155301311174067e-05,
    2.3040282868653264e-05, -7.43414373176098e-06, 2.4030650045294803e-06, -7.780590623271932e-07,
    2.52292221549171e-07, -8.191814425201751e-08, 2.6631123971197087e-08, -8.66735452117936e-09,
    2.823782220475733e-09, -9.208478900056912e-10, 3.005557716633436e-10, -9.817807908441105e-11,
    3.209452938586786e-11, -1.0499093554628647e-11, 3.436817156284411e-12, -1.1257095345411612e-12,
    3.6893065146533283e-13, -1.2097518857977885e-13, 3.968871981107387e-14, -1.3026997164106753e-14,
    4.27775872218891e-15, -1.405310318096447e-15, 4.618513976185582e-16, -1.5184385729174495e-16,
    4.994001647358881e-17, -1.6430424955539282e-17, 5.407422567540146e-18, -1.7801904595971464e-18,
    5.862339834016094e-19, -1.931069974484734e-19,
])

CHEB_K0_FAR = np.array([
    2.487981301736924, -0.009174852691025696, 0.00014445509317750059, -4.01361417543571e-06,
    1.5678318108523108e-07, -7.770110438521738e-09, 4.6111825761797177e-10, -3.158592997860566e-11,
    2.435018039365041e-12, -2.0743313873983479e-13, 1.925787280589917e-14, -1.927554805838956e-15,
    2.0621980291978182e-16, -2.3416851175792425e-17, 2.8059028106430423e-18, -3.530507631161808e-19,
])

CHEB_K1_FAR = np.array([
    2.56379308343739, 0.02832887813049721, -0.00024753706739052506, 5.771972451607249e-06,
    -2.0689392195365484e-07, 9.739983441381804e-09, -5.585336140380625e-10, 3.7329966340461855e-11,
    -2.8250519610232256e-12, 2.372019002484144e-13, -2.176677387991754e-14, 2.1579141616160325e-15,
    -2.290196930718269e-16, 2.582885729823275e-17, -3.076752641268463e-18, 3.8514877212804914e-19,
])

K0_RING0, K0_DRING, K0_NRING = 3.0, 1.0, 17
J0_RING0, J0_DRING, J0_NRING = 8.0, 1.0, 12
N_ANGLE = 15

# columns: a_re_hi, a_re_lo, a_im_hi, a_im_lo, f_re_hi, f_re_lo,
#          f_im_hi, f_im_lo, fp_re_hi, fp_re_lo, fp_im_hi, fp_im_lo
K0_ANCHORS = np.array([
    [3.0, 0.0, 0.0, 0.0, 0.03473950438627925, -1.0095096259438842e-18, 0.0, 0.0, -0.040156431128194184, -5.661632965823687e-19, 0.0, 0.0],
    [2.9811366296797277, 4.969603144697651e-17, 0.3358934283099236, -5.281861177589556e-18, 0.03276972323061381, 1.6197987050145128e-18, -0.013408257250810499, 7.192815668640434e-19, -0.03763056563475803, -3.2637836976154486e-19, 0.016028852319549477, 1.3504089808235036e-18],
    [2.924783736545471, -1.479938154143884e-16, 0.6675628018689432, -2.1273666749595944e-17, 0.02683839782827513, 8.82208575364073e-19, -0.026158226390881358, -1.6526727556241845e-18, -0.03007358524655379, 2.0585361083613267e-19, 0.031031410302254998, 1.0916312885105891e-18],
    [2.8316499909251025, 1.8845809613075993e-16, 0.9908371858655013, -4.5602082845082154e-17, 0.016877052350904136, 4.485680478228098e-19, -0.03755011087450907, 3.465597819442555e-18, -0.01754551832626012, -6.891240157621254e-20, 0.043948210935063306, 1.2800826118172757e-18],
    [2.7029066037072575, -1.7031024302172414e-16, 1.3016512173526744, -5.528893555888943e-17, 0.002762311648000392, -1.1895521038169516e-20, -0.04679607025930517, -2.727240948371226e-18, -0.00013967503063599628, -3.720902946474898e-21, 0.053648370191762836, -5.72730591994374e-19],
    [2.5401725976848524, 1.3146873505960857e-16, 1.5960962295460097, -2.4221803196290803e-17, -0.015701141642286965, -2.252007248239657e-19, -0.05296292463697141, -4.804068335132117e-19, 0.022030098059837324, -1.4953497480938812e-19, 0.058880402341526854, 8.707169923974608e-19],
    [2.3454944474040893, 1.2624526355026426e-16, 1.8704694055762006, 3.0460695153711234e-17, -0.038812018223977555, 9.06394509056502e-19, -0.05489697291842671, 2.150998279227403e-20, 0.04885370476576637, 2.522101521790947e-18, 0.05820473246966831, 2.3620125562244562e-18],
    [2.1213203435596424, 1.8805750768575327e-16, 2.1213203435596424, 1.8805750768575327e-16, -0.0670292333037987, 4.285214998012194e-18, -0.05112188404598678, 1.8046492555593746e-18, 0.0802702225239222, -5.750408995238532e-18, 0.04989830778751491, 2.949080877625717e-18],
    [1.8704694055762006, 3.0460695153711234e-17, 2.3454944474040893, 1.2624526355026426e-16, -0.10107415363109296, -3.133092856857382e-18, -0.039698841613988574, 3.17317896630716e-18, 0.1163524947530723, 1.817327011722144e-18, 0.03181932642612546, 1.771850939546981e-18],
    [1.5960962295460097, -2.4221803196290803e-17, 2.5401725976848524, 1.3146873505960857e-16, -0.14211413812817464, 3.970033349382435e-18, -0.018038415508885595, 1.2050405956820865e-18, 0.15746383836718672, -3.7404738103053393e-19, 0.0012192124163689835, -7.518767468633617e-20],
    [1.3016512173526744, -5.528893555888943e-17, 2.7029066037072575, -1.7031024302172414e-16, -0.1920892992186263, 1.6578221901280013e-18, 0.017339207014838293, -1.5949386645971113e-18, 0.20454495040435022, -1.3474934917096306e-17, -0.04550608831844362, 8.008901061430832e-19],
    [0.9908371858655013, -4.5602082845082154e-17, 2.8316499909251025, 1.8845809613075993e-16, -0.2542841046144279, 4.939210619355312e-18, 0.07107452943563368, -1.2388287197317945e-18, 0.2596282458292489, -5.0884908645549346e-18, -0.11311288897660615, 5.8497472133884764e-18],
    [0.6675628018689432, -2.1273666749595944e-17, 2.924783736545471, -1.479938154143884e-16, -0.33429744888444196, -3.0845391018124968e-18, 0.1491866547598854, 7.34678792596918e-18, 0.3267298821593499, 1.9890414324243836e-17, -0.20778675192741466, -7.266378333564198e-18],
    [0.3358934283099236, -5.281861177589556e-18, 2.9811366296797277, 4.969603144697651e-17, -0.4416122590783469, -1.267479999779358e-17, 0.2590238345482363, -1.9833541505684512e-17, 0.41332226448868986, -4.150146166397876e-18, -0.33720971779696673, 2.471011104753991e-17],
    [1.7129905491373045e-61, 1.6453761614690281e-77, 3.0, 0.0, -0.5919546114807112, 1.3060354300043408e-17, 0.40848865553578917, -1.5200548374496572e-17, 0.5325925666194442, -2.2389764725861398e-17, -0.5099973938672053, 4.958893289635515e-18],
    [4.0, 0.0, 0.0, 0.0, 0.011159676085853025, -3.904319947168525e-19, 0.0, 0.0, -0.012483498887268431, -1.0577019103743654e-20, 0.0, 0.0],
    [3.9748488395729704, -8.176836135405219e-17, 0.4478579044132314, 1.1461235506966535e-17, 0.01003827370231385, -8.344560201501796e-19, -0.005498284705034332, -4.1787037575347274e-19, -0.011152678434728199, 1.571254845129813e-19, 0.006274343335544826, -1.7688234041118856e-19],
    [3.8997116487272945, -4.9295350602497e-17, 0.8900837358252576, 4.564997930888251e-17, 0.0067045971446179995, 1.4892690114738003e-19, -0.010363869392844713, 8.678756398136147e-21, -0.007220549765731905, 1.0989946117715456e-19, 0.011735492857522694, 6.264167406367987e-19],
    [3.7755333212334703, -4.4782011725695155e-17, 1.3211162478206684, -6.08027771267762e-17, 0.0012551285773239051, 8.971529116580038e-20, -0.01392834639333093, -1.722025932816953e-19, -0.0008732899915406684, -3.1998450961503774e-20, 0.015545911759363288, 3.51221015438923e-19],
    [3.6038754716096766, -7.905058741227797e-17, 1.7355349564702325, 2.9628756315786707e-19, -0.006132167768647583, 1.7536596459796077e-19, -0.01544641449949303, 2.2353102226898747e-19, 0.007560580805099864, -1.8283534409908957e-19, 0.016814589996124712, 1.561275954016787e-18],
    [3.3868967969131365, 1.7529164674614476e-16, 2.1281283060613463, -3.2295737595054404e-17, -0.015168981428042341, 7.689129448195065e-19, -0.014042095399206875, -2.4048614993782976e-19, 0.017579346077397178, -1.8514767050043194e-19, 0.014556829349797266, -9.417951942231691e-20],
    [3.127325929872119, 2.029728145033147e-17, 2.493959207434934, 1.8864399682163584e-16, -0.02540964301140501, -1.400489005596697e-18, -0.008631276044511296, 7.373703439514843e-19, 0.02845736416874579, 1.4645832878383001e-18, 0.0076329745801956015, 3.6844964586607843e-19],
    [2.8284271247461903, -1.9334586626905827e-16, 2.8284271247461903, -1.9334586626905827e-16, -0.03617884789954761, -1.0987985866048488e-18, 0.0021983992949725197, 2.1315270318417646e-19, 0.03916601076917133, -8.580232619046937e-19, -0.005351296460277448, 3.687049649535717e-19],
    [2.493959207434934, 1.8864399682163584e-16, 3.127325929872119, 2.029728145033147e-17, -0.046465523326779105, 2.4403058523476666e-18, 0.020384291229092945, -7.269178973141697e-19, 0.04825518627477104, 3.2804155948220245e-18, -0.02621481474475549, 1.5806652334474544e-19],
    [2.1281283060613463, -3.2295737595054404e-17, 3.3868967969131365, 1.7529164674614476e-16, -0.0547771027498196, 2.228789611664963e-18, 0.04872400467395274, 1.671178742668217e-18, 0.05368491013696908, 2.925603105227441e-18, -0.05749945456906011, -2.4242016340985706e-18],
    [1.7355349564702325, 2.9628756315786707e-19, 3.6038754716096766, -7.905058741227797e-17, -0.05896556376974948, 7.65828670361251e-19, 0.09146045775825434, -1.3572790656757728e-18, 0.05260939497762829, -3.3770198454771726e-19, -0.10300454119980672, -5.0580095470795735e-18],
    [1.3211162478206684, -6.08027771267762e-17, 3.7755333212334703, -4.4782011725695155e-17, -0.056092511225403284, 1.126969760818941e-18, 0.15531013200649327, 9.731038824292787e-18, 0.04116410951393601, -1.842878929909453e-18, -0.1687464473827987, 2.848043751403006e-18],
    [0.8900837358252576, 4.564997930888251e-17, 3.8997116487272945, -4.9295350602497e-17, -0.04254976396703984, 2.829144339376437e-18, 0.2512450277981269, 2.3574120833603162e-17, 0.014441803496951884, -2.8591861798370487e-19, -0.2646539050357922, -1.3462513775044018e-17],
    [0.4478579044132314, 1.1461235506966535e-17, 3.9748488395729704, -8.176836135405219e-17, -0.014998413109641383, 3.8384275057529156e-19, 0.3974523454315638, -2.070084769782218e-17, -0.03283185345632691, 1.738002126625394e-18, -0.4074378826419935, 1.8583914295435735e-17],
    [2.2839873988497397e-61, -1.2606325400790738e-77, 4.0, 0.0, 0.026610451105001945, 5.276565461529302e-19, 0.623841462521423, 2.467109156767955e-17, -0.10374061706870144, -2.0855762400398884e-18, -0.6250602444803419, 1.6486877113667164e-17],
    [5.0, 0.0, 0.0, 0.0, 0.0036910983340425942, 4.6336157578728725e-20, 0.0, 0.0, -0.004044613445452165, 3.8369935947236984e-19, 0.0, 0.0],
    [4.968561049466213, 2.3085645569498174e-16, 0.5598223805165393, -2.7306819039735203e-17, 0.003114604779628077, -4.5829852988291963e-20, -0.0021933790705403714, 4.0271494242289076e-20, -0.003388582082538256, 1.1510723809369086e-20, 0.0024344155278790075, 7.15137044820999e-20],
    [4.874639560909118, -3.9468609564066823e-16, 1.1126046697815721, -1.0947097955767035e-16, 0.0014381419899353704, -8.662640927478899e-20, -0.003931171310455791, 2.025813889816792e-19, -0.0014920394632117464, 5.987659740095778e-20, 0.004328738887097894, -3.020888062101387e-19],
    [4.719416651541838, -2.7802211958215023e-16, 1.6513953097758354, 3.501883105404539e-17, -0.0011716485616640076, 5.222157314278605e-20, -0.004749252165707331, 3.86363876125506e-19, 0.001423246644925228, -4.750215680328572e-20, 0.00514537072463136, 5.3657574628859283e-20],
    [4.504844339512096, -4.3188014165289444e-16, 2.1694186955877908, -1.6616309423982615e-16, -0.004409976067633152, -3.851261623011873e-19, -0.004166826667183662, -2.1584843736093877e-20, 0.00496225734533102, -6.986187494311206e-20, 0.004352885218092916, -2.43389074005794e-19],
    [4.233620996141421, -2.249746514173817e-16, 2.6601603825766826, 1.816749329312133e-16, -0.007786517169625877, 8.232268324678791e-20, -0.0016791400032571584, 8.973336977627822e-20, 0.008512063665153799, 4.470651857286873e-19, 0.0014323114058444372, 4.9820263176168754e-20],
    [3.909157412340149, -8.565070064960131e-17, 3.1174490092936677, -9.726191136050215e-17, -0.010542906658356083, 1.7771386677268359e-19, 0.003248689923903937, 3.312442445710059e-20, 0.011163684730256924, -6.654952392114309e-19, -0.00411227568533232, -1.1637227686131123e-19],
    [3.5355339059327378, -1.3066003037380717e-16, 3.5355339059327378, -1.3066003037380717e-16, -0.011511727199490663, 4.780606689149903e-19, 0.011187586509869639, 7.278597669270908e-19, 0.011577754393252468, -6.533104642311407e-19, -0.012737390484218567, 1.3085567987682269e-19],
    [3.1174490092936677, -9.726191136050215e-17, 3.909157412340149, -8.565070064960131e-17, -0.008873075649091148, -8.404540174612954e-19, 0.022755621457765628, -1.7336501838864882e-18, 0.007751035431181793, -2.5448275982817835e-19, -0.024839386847924905, 3.0792333574413993e-19],
    [2.6601603825766826, 1.816749329312133e-16, 4.233620996141421, -2.249746514173817e-16, 0.0002736785351211867, -1.55052937295724e-20, 0.03865481314494956, -2.7035372987290635e-18, -0.003397499636743516, -1.1513780541992997e-19, -0.04074245782126882, -3.1575040740473105e-18],
    [2.1694186955877908, -1.6616309423982615e-16, 4.504844339512096, -4.3188014165289444e-16, 0.020675568054089734, -9.406083306632894e-19, 0.05979884716925499, 4.702359379628753e-19, -0.026773280392702475, 1.0100713633551726e-18, -0.06074693226033292, -2.58604198732265e-18],
    [1.6513953097758354, 3.501883105404539e-17, 4.719416651541838, -2.7802211958215023e-16, 0.060300556204525076, -6.561757455533634e-19, 0.08772053096894307, -2.0290639772392213e-18, -0.07046036679779627, -6.751411215320571e-18, -0.08540112877665434, -3.9741553847203533e-19],
    [1.1126046697815721, -1.0947097955767035e-16, 4.874639560909118, -3.9468609564066823e-16, 0.1327578325135625, 3.033436835362201e-18, 0.12576580585344102, 1.090193644963744e-17, -0.14813692306290188, 7.894586023023026e-18, -0.11645691783583265, 5.9040687868745714e-18],
    [0.5598223805165393, -2.7306819039735203e-17, 4.968561049466213, 2.3085645569498174e-16, 0.2613088120300106, -1.2841013476479463e-17, 0.18233153942334465, 8.665837725598015e-18, -0.28315150891855995, -2.620215655583527e-17, -0.15968633079540984, -1.6815040102192149e-18],
    [2.8549842485621746e-61, -7.121738195893977e-78, 5.0, 0.0, 0.4846183524926667, -1.1410851170229559e-18, 0.27896835603119585, 2.0575839397443564e-17, -0.5145601060633136, -1.504189521839468e-17, -0.23226288250728622, -4.36564192415588e-18],
    [6.0, 0.0, 0.0, 0.0, 0.0012439943280131232, -9.083076783631193e-20, 0.0, 0.0, -0.001343919717735509, 1.0087773069981202e-19, 0.0, 0.0],
    [5.962273259359455, 9.939206289395302e-17, 0.6717868566198472, -1.0563722355179112e-17, 0.000966282906875796, -4.1346594039781404e-20, -0.0008575747793017923, -4.662632668917797e-20, -0.001035993904995493, -9.21956052599e-20, 0.0009344753053465549, -5.371125219931395e-20],
    [5.849567473090942, -2.959876308287768e-16, 1.3351256037378865, -4.254733349919189e-17, 0.00018392699144766884, -4.6194750261552945e-21, -0.0014347728214102668, 1.0722775477379535e-19, -0.00017352449647803437, 9.31794350320944e-21, 0.0015505757489970272, 9.912399096861395e-20],
    [5.663299981850205, 3.7691619226151987e-16, 1.9816743717310026, -9.120416569016431e-17, -0.0009455347187025114, -4.2282973506800894e-20, -0.0014648875531734376, -6.137296744849974e-20, 0.0010553041689275733, -8.736749421722173e-20, 0.0015521981929895335, -9.555474577689759e-20],
    [5.405813207414515, -3.4062048604344827e-16, 2.603302434705349, -1.1057787111777885e-16, -0.0021412562127727745, 2.0137241472343107e-19, -0.0007138858137494558, 2.3194535570789233e-20, 0.0023218878535040013, 2.0425504396665927e-19, 0.0006934700897595467, -8.20839848721557e-21],
    [5.080345195369705, 2.6293747011921715e-16, 3.1921924590920194, -4.8443606392581606e-17, -0.0029680241136484974, 2.1123189325424457e-19, 0.0009879605479238152, 2.0067496715646462e-20, 0.003131782888528587, 2.1995282145628296e-20, -0.0011798943398487352, -2.668776557407065e-20],
    [4.690988894808179, 2.524905271005285e-16, 3.740938811152401, 6.092139030742247e-17, -0.002783930238017357, -1.5136323361890928e-19, 0.0036896949074150085, -1.4724023335320459e-19, 0.002781837084487787, -6.807426696478834e-20, -0.004063156159179905, -4.31126051024762e-19],
    [4.242640687119285, 3.7611501537150655e-16, 4.242640687119285, 3.7611501537150655e-16, -0.0006530375083472784, 2.602458656374845e-20, 0.007216491544425461, -3.477857747515472e-19, 0.0002883499419457673, -1.4639124587873543e-20, -0.007676089672338013, -1.988732725570934e-19],
    [3.740938811152401, 6.092139030742247e-17, 4.690988894808179, 2.524905271005285e-16, 0.004806072971333801, 2.7095625158768645e-19, 0.010977936986058888, 7.763248072295949e-19, -0.005738718618919209, 1.5128483480020709e-19, -0.011254166457395952, 1.5852469949014113e-19],
    [3.1921924590920194, -4.8443606392581606e-17, 5.080345195369705, 2.6293747011921715e-16, 0.015701570139429095, 1.6511798741560994e-18, 0.01360803934255938, -5.353447852810994e-19, -0.017333406802048354, -1.0684060417179722e-18, -0.013164342690401433, -7.349693274030404e-19],
    [2.603302434705349, -1.1057787111777885e-16, 5.405813207414515, -3.4062048604344827e-16, 0.03543630893347188, 4.872001986426991e-19, 0.01228758864619976, -1.71672979761645e-19, -0.037665334626310665, -2.0019994715497231e-19, -0.010188435875588623, -9.764083562184312e-20],
    [1.9816743717310026, -9.120416569016431e-17, 5.663299981850205, 3.7691619226151987e-16, 0.06994998629517762, -5.97779464309253e-18, 0.001488435073278985, 5.928355427677698e-21, -0.07214482403941147, -6.23194695753945e-18, 0.0038053797382526424, -8.557877934679665e-21],
    [1.3351256037378865, -4.254733349919189e-17, 5.849567473090942, -2.959876308287768e-16, 0.13059670643005797, 7.383705598964184e-18, -0.02923067233244682, -2.90315303096553e-20, -0.13105218093039608, -1.347068876729335e-17, 0.04022249921218599, 2.9291584076427325e-18],
    [0.6717868566198472, -1.0563722355179112e-17, 5.962273259359455, 9.939206289395302e-17, 0.24096237511130655, -1.3576712083873466e-17, -0.09857208758111455, 3.590206743064358e-18, -0.23591451747921688, 7.734415886952292e-18, 0.11945534960423647, 5.690793593843336e-18],
    [3.425981098274609e-61, 3.2907523229380563e-77, 6.0, 0.0, 0.45269515100008056, 2.3489572599043513e-18, -0.23663301673893825, -2.7996590206452945e-19, -0.43461398803022033, -2.7182215673983563e-17, 0.27490560597817576, -1.648830737130883e-17],
    [7.0, 0.0, 0.0, 0.0, 0.0004247957418692318, 1.5136331886688096e-20, 0.0, 0.0, -0.00045418248688489695, -1.924266139359199e-20, 0.0, 0.0],
    [6.955985469252698, -3.207232990707569e-17, 0.783751332723155, 6.1793743293769795e-18, 0.00029695183613029667, -2.076617825913495e-20, -0.00033001642978293047, -1.968601793133933e-20, -0.0003148927026753343, 2.4988332974212732e-20, 0.0003549487244460997, -4.205285745135941e-21],
    [6.8244953852727654, -1.972891660168854e-16, 1.5576465376942008, 2.4376312559286564e-17, -4.831271958753931e-05, -1.5815648757800622e-21, -0.0005041602352201556, 4.064890962133505e-20, 5.9123494291996856e-05, 2.0967838937804967e-21, 0.0005375094121328485, -2.0233150427166114e-20],
    [6.607183312158573, 1.4367608440506479e-16, 2.3119534336861696, 4.617442490657291e-18, -0.0004948960464784076, -2.4835051585482427e-20, -0.0003893287828340873, -7.415503342095534e-21, 0.0005360235927570653, -2.7032059431280885e-20, 0.00040385863300194865, 1.0008913464209854e-20],
    [6.306782075316934, -2.493608304340021e-16, 3.037186173822907, -5.499264799573156e-17, -0.0008454053853187138, -3.330740401539352e-20, 9.601703081708624e-05, -1.7093777053877663e-21, 0.000895730183263853, -5.2679596234226214e-20, -0.0001268128368210511, 1.944524660643335e-21],
    [5.927069394597989, -1.3732882804430929e-16, 3.724224535607356, 1.655270641336861e-16, -0.0008172046076315193, 5.209869402810782e-20, 0.0009389643236742434, 1.5007526249743666e-20, 0.0008319066948515581, -3.6810488391065576e-20, -0.0010241360636712479, 1.0384435036165995e-20],
    [5.472820377276209, -2.975466648494669e-16, 4.3644286130111345, 2.191046919753471e-16, -4.199804791436108e-05, -3.225102294911196e-21, 0.0019619100407793928, -2.7825883664398664e-23, -3.875175121488026e-05, 5.211460820956783e-22, -0.0020719347201644915, 1.921592280160521e-19],
    [4.949747468305833, -5.288358583304994e-18, 4.949747468305833, -5.288358583304994e-18, 0.0019220215686653417, 9.226012083190532e-20, 0.0027003651075956764, -9.510825768200259e-20, -0.0021488969236968087, 1.5706389881917057e-19, -0.0027435871155434585, -1.1376903562126644e-19],
    [4.3644286130111345, 2.191046919753471e-16, 5.472820377276209, -2.975466648494669e-16, 0.005546144992648368, 2.197677161072278e-19, 0.0021791104735066832, 1.0516961375725727e-19, -0.005911487521348473, -1.7705976687720234e-19, -0.00197991274411967, 1.7524202599475272e-20],
    [3.724224535607356, 1.655270641336861e-16, 5.927069394597989, -1.3732882804430929e-16, 0.011216270761902878, 2.5616560496815542e-20, -0.0015208101649210215, -6.317113377031211e-20, -0.01156284497468084, 2.137186489984993e-19, 0.0022333534535479696, 4.8213084656356237e-20],
    [3.037186173822907, -5.499264799573156e-17, 6.306782075316934, -2.493608304340021e-16, 0.018977434482086802, 1.4125057842738258e-19, -0.012150910924745136, 8.130598850864354e-19, -0.018832069026700333, 3.581043200137569e-19, 0.01372596360115942, 5.783608643010303e-19],
    [2.3119534336861696, 4.617442490657291e-18, 6.607183312158573, 1.4367608440506479e-16, 0.028050242733531097, -6.484163025231695e-19, -0.03722982195447239, 1.1768901899121402e-18, -0.02631303061895485, -2.7304269341293597e-19, 0.04001402304349963, -1.967445818554716e-18],
    [1.5576465376942008, 2.4376312559286564e-17, 6.8244953852727654, -1.972891660168854e-16, 0.036181921024211985, -4.262064779607478e-19, -0.09245336541541396, 1.8450637792127738e-18, -0.03051513876018128, 4.543038281263639e-19, 0.09658325446166593, -1.9672873514259994e-18],
    [0.783751332723155, 6.1793743293769795e-18, 6.955985469252698, -3.207232990707569e-17, 0.03988243345876371, 1.0045818951298782e-18, -0.2119371675189237, 2.501545996895997e-20, -0.025433159399956648, -1.072982939619932e-18, 0.21691816199441263, 6.9387608680474176e-18],
    [3.996977947987044e-61, 3.847436213899544e-78, 7.0, 0.0, 0.040761762504960344, -2.86369602348518e-18, -0.47136341587941005, 1.2591820450151313e-17, -0.00735576192509772, -4.66067397287741e-20, 0.47542858415874995, -1.4544502336797905e-17],
    [8.0, 0.0, 0.0, 0.0, 0.0001464707052228154, -4.7767439191554756e-21, 0.0, 0.0, -0.00015536921180500115, 1.2243242090871277e-20, 0.0, 0.0],
    [7.949697679145941, -1.6353672270810438e-16, 0.8957158088264628, 2.292247101393307e-17, 8.957067553158934e-05, -3.624463786483719e-22, -0.0001253202236708549, -9.929784289870651e-21, -9.4149992783217e-05, -6.265896335093647e-21, 0.00013348304670399066, 7.905828435563173e-21],
    [7.799423297454589, -9.8590701204994e-17, 1.7801674716505151, 9.129995861776502e-17, -5.6063204140396856e-05, -2.531869118312784e-21, -0.00017005652169847684, -9.635200126672858e-21, 6.163186477601971e-05, 7.115713704448946e-22, 0.000179408400303307, -4.726879770336083e-21],
    [7.551066642466941, -8.956402345139031e-17, 2.6422324956413368, -1.216055542535524e-16, -0.000216811672220953, 1.3245617278077914e-20, -7.564709770348964e-05, -4.927059469055057e-21, 0.00023077895741910033, -2.8371646714948254e-21, 7.575489629693285e-05, 1.0067876292567103e-21],
    [7.207750943219353, -1.5810117482455594e-16, 3.471069912940465, 5.925751263157341e-19, -0.0002764828671877093, 2.1433278983950006e-20, 0.0001686609283471919, -4.072840703246581e-21, 0.0002873817700652261, 2.9660585938972392e-21, -0.00018509359398240485, -2.729258156254704e-21],
    [6.773793593826273, 3.505832934922895e-16, 4.256256612122693, -6.459147519010881e-17, -9.111065739162498e-05, -4.621502504819609e-21, 0.0004918201965885105, 3.416876412205312e-20, 8.026280796384501e-05, 5.918519316220903e-21, -0.0005203159510147836, 3.5744403210200004e-20],
    [6.254651859744238, 4.059456290066294e-17, 4.987918414869868, 3.772879936432717e-16, 0.0004772872244637235, 7.794242166518101e-21, 0.0006928282495011171, -8.258539976684095e-21, -0.0005261839489654618, 1.694292586378492e-21, -0.0007085464885189841, 2.5053739494864324e-20],
    [5.656854249492381, -3.8669173253811654e-16, 5.656854249492381, -3.8669173253811654e-16, 0.0014858340685189625, 2.021690016730732e-21, 0.0003695839561259596, 2.6775248260323255e-21, -0.0015669747999600444, 3.0266541295185255e-20, -0.0003228570478077209, -1.2036043011359658e-20],
    [4.987918414869868, 3.772879936432717e-16, 6.254651859744238, 4.059456290066294e-17, 0.0027455634220845534, 3.8534807362608286e-20, -0.0011898500997751143, 2.8436501911869115e-20, -0.0027972334305704717, -2.1659916365471137e-19, 0.001365772671545199, 9.820800337688443e-20],
    [4.256256612122693, -6.459147519010881e-17, 6.773793593826273, 3.505832934922895e-16, 0.0034525491797330827, -5.947249817017489e-20, -0.005182582760247646, -3.638253492201153e-19, -0.003304122824112716, 1.5515673547992306e-19, 0.005535031163682852, -5.049329748798029e-20],
    [3.471069912940465, 5.925751263157341e-19, 7.207750943219353, -1.5810117482455594e-16, 0.001345207362915881, -7.495161891129816e-20, -0.013607485223955317, 7.34578873864813e-19, -0.0006377806763396335, 4.0569697957108446e-20, 0.014063726916735913, -3.8397096856915966e-19],
    [2.6422324956413368, -1.216055542535524e-16, 7.551066642466941, -8.956402345139031e-17, -0.0092724644981054, 7.948666382310273e-20, -0.02996583281441506, 9.883499290070533e-19, 0.011204767573171785, -6.973425365808595e-20, 0.030089040318006494, 8.229889845107767e-19],
    [1.7801674716505151, 9.129995861776502e-17, 7.799423297454589, -9.8590701204994e-17, -0.04224639296814041, -1.0847132537461261e-18, -0.06123627199622448, 2.7895164086797107e-18, 0.046571178918031246, 1.064805157665217e-18, 0.05965320803483698, -2.5143606687127164e-18],
    [0.8957158088264628, 2.292247101393307e-17, 7.949697679145941, -1.6353672270810438e-16, -0.13067594208042813, 1.5503678114560176e-18, -0.12444662197844573, -5.075429877694921e-18, 0.13947392012456158, -8.226624563619745e-18, 0.11750744633939841, 6.919569336984001e-18],
    [4.5679747976994795e-61, -2.5212650801581476e-77, 8.0, 0.0, -0.35110673448971347, -1.764192021916372e-17, -0.2696284573430489, 1.2058458696261207e-17, 0.3685659117707024, -2.5048370974683056e-17, 0.2482807926989489, -8.873483897785665e-18],
    [9.0, 0.0, 0.0, 0.0, 5.0881312956459246e-05, 1.3555555719412642e-21, 0.0, 0.0, -5.363701637945195e-05, 2.891109288123491e-21, 0.0, 0.0],
    [8.943409889039183, 5.931773041909922e-16, 1.0076802849297708, -7.13567347640265e-17, 2.6213060304168195e-05, 1.6859097968775693e-21, -4.7036567179564574e-05, -1.5760978120704946e-21, -2.734579435023427e-05, -1.4541374635096545e-21, 4.972434953719607e-05, -1.2759797769443104e-21],
    [8.774351209636412, 1.0776360689740756e-19, 2.0026884056068295, 1.5822360467624347e-16, -3.286186464060392e-05, -2.994789665703163e-21, -5.466186372540141e-05, -1.7534498492587958e-21, 3.524391708819378e-05, -2.290134199516762e-21, 5.7165800030586394e-05, 1.0536821098363343e-21],
    [8.494949972775308, 5.653742883922799e-16, 2.9725115575965035, 1.962606588523005e-16, -8.436707497632718e-05, 4.2644001452317664e-21, -4.1770031776828824e-07, -1.3569294676878083e-23, 8.870375251778194e-05, 6.496273972416431e-21, -1.0379859856360628e-06, 7.762667409939324e-23],
    [8.108719811121771, 8.213369004850155e-16, 3.904953652058023, 5.617779824836303e-17, -6.895012789035146e-05, 3.677930587439156e-21, 0.00010330640999313318, 2.6033728495836527e-21, 6.995761613452696e-05, -5.483542524501034e-21, -0.00010997087722781203, -4.659348688366425e-21],
    [7.620517793054558, -4.96830046712369e-17, 4.788288688638029, 1.493791953361589e-16, 6.936651764493779e-05, 6.164634477035251e-21, 0.00019025068388208382, -7.75494760309976e-21, -7.79699294782562e-05, 6.301944422320615e-22, -0.00019710745004358746, 5.523215057843426e-21],
    [7.036483342212268, 3.787357906507928e-16, 5.611408216728602, -3.527071243889289e-16, 0.0003422271607718267, 9.293960768987903e-21, 0.00012227598510238368, -3.9126311799682534e-21, -0.0003610248381546408, -4.801636996765901e-21, -0.00011615099577343953, 3.872076978425859e-21],
    [6.363961030678928, 1.2008331320719718e-16, 6.363961030678928, 1.2008331320719718e-16, 0.0006371641911212719, -2.515587669979196e-20, -0.00031915291619127433, -1.7982577001016177e-20, -0.0006500505336194244, 1.8468951621749843e-20, 0.00035578179987233585, -2.67479696156269e-20],
    [5.611408216728602, -3.527071243889289e-16, 7.036483342212268, 3.787357906507928e-16, 0.0005599584566032498, 2.125207642245336e-20, -0.0014066542916098149, -3.922497396704422e-20, -0.000520376827689652, -3.3458050154464564e-20, 0.0014792040364726756, -7.514535690226021e-20],
    [4.788288688638029, 1.493791953361589e-16, 7.620517793054558, -4.96830046712369e-17, -0.0008886541898162861, 1.1845964796928318e-20, -0.0033358213840631425, 1.7670386402005176e-19, 0.0010677833873940475, -9.45067950044081e-20, 0.0033955496671210727, -2.960414386852785e-20],
    [3.904953652058023, 5.617779824836303e-17, 8.108719811121771, 8.213369004850155e-16, -0.0060199649095113, -3.4852493096532824e-19, -0.005801994433700389, 6.993050241843897e-20, 0.006453254425598489, -3.2872464755343645e-19, 0.005652546108078381, 1.721576192618122e-20],
    [2.9725115575965035, 1.962606588523005e-16, 8.494949972775308, 5.653742883922799e-16, -0.020154544370425055, 2.091792036209939e-19, -0.006798308816773464, 1.936690263563124e-19, 0.020895241016851435, -1.2072814265208649e-18, 0.005894082996909674, 2.982571579688686e-19],
    [2.0026884056068295, 1.5822360467624347e-16, 8.774351209636412, 1.0776360689740756e-19, -0.05617523866171658, 2.8621548880273995e-18, 0.000540583462337543, 5.273742013070033e-21, 0.05691223302985227, 9.989097603416233e-19, -0.003546787169678956, 3.4757659997874337e-20],
    [1.0076802849297708, -7.13567347640265e-17, 8.943409889039183, 5.931773041909922e-16, -0.14800803872641685, 1.2889401607430457e-17, 0.03533894836959704, -1.0270010090544267e-18, 0.14720601906681408, -1.2440998825831378e-17, -0.043707889957448766, 3.0758338843209367e-18],
    [5.138971647411914e-61, 1.4816610623693064e-77, 9.0, 0.0, -0.3925996475973611, 2.673428732417585e-18, 0.14189570463218024, -8.155214071974438e-18, 0.38533485326887296, 2.0538965907066845e-17, -0.16385695155017135, 6.857247173382805e-18],
    [10.0, 0.0, 0.0, 0.0, 1.778006231616765e-05, 1.6302858289134316e-21, 0.0, 0.0, -1.8648773453825585e-05, 8.577301565852997e-22, 0.0, 0.0],
    [9.937122098932425, 4.617129113899635e-16, 1.1196447610330786, -5.4613638079470406e-17, 7.30965195450531e-06, 2.338932748787228e-22, -1.7467396615701785e-05, 1.4644380829321992e-21, -7.571152574091465e-06, -2.7222839639728236e-22, 1.835493034652144e-05, 3.276019469134203e-22],
    [9.749279121818237, -7.893721912813365e-16, 2.2252093395631443, -2.189419591153407e-16, -1.5810848731131104e-05, 2.231663161534293e-22, -1.6500143046075305e-05, -1.4931515066457486e-22, 1.6740855232299122e-05, 1.443738925518552e-22, 1.7118946497396526e-05, -9.120122720876715e-22],
    [9.438833303083676, -5.560442391643005e-16, 3.3027906195516707, 7.003766210809079e-17, -2.9542338963915353e-05, 3.9642683954567744e-22, 9.977647688093777e-06, 7.638078613313044e-23, 3.0751632327443625e-05, -1.0309166814478342e-21, -1.0906899723223049e-05, -6.710070168814345e-22],
    [9.009688679024192, -8.637602833057889e-16, 4.3388373911755815, -3.323261884796523e-16, -7.356530100402886e-06, 4.212320833217331e-22, 4.734708392041867e-05, -3.171459847356793e-21, 6.6965367930306144e-06, 2.0649024218698043e-22, -4.95977129908407e-05, 4.500477166957071e-22],
    [8.467241992282842, -4.499493028347634e-16, 5.320320765153365, 3.633498658624266e-16, 6.368423462628792e-05, 5.0501055727218264e-21, 5.240156590970701e-05, 1.5864913058923212e-21, -6.768627092584173e-05, -1.797680523111737e-21, -5.296196668208679e-05, -1.5384947266858676e-21],
    [7.818314824680298, -1.7130140129920262e-16, 6.2348980185873355, -1.945238227210043e-16, 0.00015172186898259623, -3.1095834464188477e-22, -4.3804684119657885e-05, 6.108839263069349e-22, -0.00015628789393676398, 2.1001650362993514e-21, 5.006384796521312e-05, 2.700797860088348e-21],
    [7.0710678118654755, -2.6132006074761434e-16, 7.0710678118654755, -2.6132006074761434e-16, 0.0001294663302148061, 1.0544643201292761e-20, -0.0003075245690881442, 2.3161909637495116e-20, -0.0001235196023118019, -4.854897853516224e-21, 0.0003228018625896036, 1.549918918658756e-20],
    [6.2348980185873355, -1.945238227210043e-16, 7.818314824680298, -1.7130140129920262e-16, -0.0003028962016917318, 1.156499124148957e-20, -0.0007086245794915928, 4.8165260493856994e-20, 0.0003392737601469397, -1.3646770715825886e-20, 0.0007193548441714356, 1.0388847300157954e-20],
    [5.320320765153365, 3.633498658624266e-16, 8.467241992282842, -4.499493028347634e-16, -0.001722859630323228, -7.642242405019513e-20, -0.0008593287960150796, 5.0487633143748116e-20, 0.001804867885479318, 3.461049853311717e-20, 0.0008115150775620991, 4.03349207794623e-20],
    [4.3388373911755815, -3.323261884796523e-16, 9.009688679024192, -8.637602833057889e-16, -0.005096244443899072, 3.695615051437929e-19, 0.0006929399365119593, -4.3400588895145024e-20, 0.005179657268012079, -1.1651885813808178e-19, -0.0009329716742517503, -1.901323988164702e-20],
    [3.3027906195516707, 7.003766210809079e-17, 9.438833303083676, -5.560442391643005e-16, -0.0118120664639424, 3.4411270632240227e-19, 0.008428646484770666, -1.14579670427831e-19, 0.011626609225464291, -6.854582518757366e-19, -0.009122854773919923, -7.111483033004884e-20],
    [2.2252093395631443, -2.189419591153407e-16, 9.749279121818237, -7.893721912813365e-16, -0.023567136731360926, -1.520427083018233e-18, 0.035584072633227416, 2.5428128109879787e-18, 0.022141457830310546, -1.176739155700523e-18, -0.03715108753005667, -1.4676441583015212e-18],
    [1.1196447610330786, -5.4613638079470406e-17, 9.937122098932425, 4.617129113899635e-16, -0.043223000968014624, -1.7251980724806692e-19, 0.12165523124919733, 2.1565244661134803e-18, 0.037517543382964626, -1.40680891550093e-18, -0.12460862860834172, -1.345222364862555e-19],
    [5.709968497124349e-61, -1.4243476391787953e-77, 10.0, 0.0, -0.08744806507746215, 6.415113628165602e-18, 0.3863149954276729, -1.3073974185632021e-17, 0.06828682999773446, 1.4511590086210011e-18, -0.39115251365955617, 2.35572590372341e-17],
    [11.0, 0.0, 0.0, 0.0, 6.243020547653677e-06, 3.458526414045186e-22, 0.0, 0.0, -6.520860674580886e-06, -2.078067926190008e-22, 0.0, 0.0],
    [10.930834308825668, 3.3024851858893473e-16, 1.2316092371363865, -3.7870541394914316e-17, 1.8763248346927394e-06, 2.5483567667600032e-23, -6.42202204884672e-06, -3.120421974400692e-22, -1.927957269408872e-06, -3.2442883619970086e-24, 6.715299283887824e-06, -2.16030831944308e-22],
    [10.72420703400006, 1.9750469323068022e-16, 2.4477302735194586, -1.5201831305686222e-16, -6.8640554107218625e-06, 1.9737912241424448e-22, -4.536390392149416e-06, 7.808202079303039e-23, 7.206377158698495e-06, 1.413966283957804e-22, 4.666804318683092e-06, -7.471717506360298e-23],
    [10.382716633392043, 9.889407267936962e-17, 3.633069681506838, -5.618533463611892e-17, -9.174354542121893e-06, -3.109515032334428e-23, 7.066168666652948e-06, -2.1789764286953227e-22, 9.458973896596606e-06, 2.8107038182501586e-22, -7.496409902872957e-06, -3.0887169451997426e-23],
    [9.910657546926611, -7.725006276963427e-16, 4.77272113029314, -2.76740965357605e-16, 5.1359724644061494e-06, -2.350095509026794e-22, 1.7849911644093645e-05, 2.290966052581132e-22, -5.6821669327174576e-06, -3.9245031569443286e-22, -1.8472273725377033e-05, -9.699246204252544e-22],
    [9.313966191511126, 3.796281870183548e-17, 5.8523528416687025, -3.1085788331143093e-16, 3.33407882842792e-05, 9.766670670414174e-22, 5.242307455276235e-06, 1.7052810693764988e-22, -3.473124565709223e-05, -2.6516172736050233e-21, -4.66364856925445e-06, 2.781489657667284e-22],
    [8.600146307148329, -7.21338593249198e-16, 6.858387820446069, -3.634052105307967e-17, 4.258280512971399e-05, -9.286768364061849e-23, -5.423560227235307e-05, -2.420333405842841e-21, -4.259830191898205e-05, 5.051050800295648e-22, 5.7316150885014e-05, 2.9011307196577867e-21],
    [7.7781745930520225, 2.4545498499769935e-16, 7.7781745930520225, 2.4545498499769935e-16, -4.779193360644515e-05, -1.7091488103111987e-21, -0.00014953707795241244, 3.556671229992757e-21, 5.398696583622153e-05, -2.6977531998379583e-21, 0.00015284536009253378, -2.466928797144704e-22],
    [6.858387820446069, -3.634052105307967e-17, 8.600146307148329, -7.21338593249198e-16, -0.0003654371834316821, 8.278283448346015e-21, -0.00014775858001113808, -1.1031469320709523e-20, 0.0003809597962452672, 2.620436635324733e-20, 0.00013933420033298725, 7.022325128038386e-21],
    [5.8523528416687025, -3.1085788331143093e-16, 9.313966191511126, 3.796281870183548e-17, -0.001000033227987994, 4.817970557659141e-20, 0.00040514326494811765, -1.4738153715314533e-20, 0.0010093574603147921, 9.41051010598458e-20, -0.00045266499182006767, 2.2880331776219008e-20],
    [4.77272113029314, -2.76740965357605e-16, 9.910657546926611, -7.725006276963427e-16, -0.0016175263118501184, 3.7798102328353575e-20, 0.0027371065496300936, -1.5574361748666044e-19, 0.0015404719341447477, -9.574903800907961e-20, -0.002857533074694806, -4.6878064458411626e-20],
    [3.633069681506838, -5.618533463611892e-17, 10.382716633392043, 9.889407267936962e-17, -6.111653904876812e-05, -4.452302847132792e-21, 0.009948236192443305, -1.2738460274275329e-19, -0.0003579562656485796, -1.9143938578648993e-20, -0.01010740241032467, -6.594461793651206e-19],
    [2.4477302735194586, -1.5201831305686222e-16, 10.72420703400006, 1.9750469323068022e-16, 0.01241954438072274, 7.496238728769102e-20, 0.030127341251345197, -5.725103390618937e-19, -0.013875625370436706, 6.575655999283317e-19, -0.029914132792350733, -7.968460484751854e-19],
    [1.2316092371363865, -3.7870541394914316e-17, 10.930834308825668, 3.3024851858893473e-16, 0.06692040238857364, -3.099183928873572e-18, 0.08740678102257304, -5.300438219562882e-18, -0.07124647825575249, 2.0446728955779732e-18, -0.08493414129468156, -2.1404437981982111e-19],
    [6.280965346836784e-61, 2.5785785033486584e-77, 11.0, 0.0, 0.26522475615882674, -3.784112856738752e-18, 0.2689050950625385, -2.2215975044114633e-18, -0.2776936982325558, -6.695164880788718e-18, -0.25714805684737674, -1.3231888290722724e-17],
    [12.0, 0.0, 0.0, 0.0, 2.2008253973114916e-06, -1.7445095823293022e-22, 0.0, 0.0, -2.290757464767188e-06, 1.2644804835657684e-23, 0.0, 0.0],
    [11.92454651871891, 1.9878412578790603e-16, 1.3435737132396943, -2.1127444710358223e-17, 4.0669759903237416e-07, 2.0953227405370512e-23, -2.3383404573791326e-06, -1.7963328689596815e-23, -4.127123228966069e-07, 1.625676048916745e-23, 2.4351493919459117e-06, 8.321687239568334e-24],
    [11.699134946181884, -5.919752616575536e-16, 2.670251207475773, -8.509466699838378e-17, -2.782042312721526e-06, -3.7473257438012153e-23, -1.0512730301922955e-06, -8.629666897652255e-23, 2.9024134621824385e-06, -1.542594868127558e-23, 1.0683548108096729e-06, 1.5581675791492003e-23],
    [11.32659996370041, 7.538323845230397e-16, 3.963348743462005, -1.8240833138032862e-16, -2.380441440364327e-06, 1.1198086648014834e-22, 3.602298784665978e-06, 2.5081851255819767e-23, 2.4247151616645707e-06, 1.9148342513046294e-23, -3.7732552976742373e-06, 1.6280454980584024e-22],
    [10.81162641482903, -6.812409720868965e-16, 5.206604869410698, -2.211557422355577e-16, 4.736186236915616e-06, -4.360294194513453e-23, 5.4613882532857216e-06, 4.041372629460851e-22, -5.0068719244269415e-06, 2.320837312918501e-22, -5.580845441933786e-06, -3.106736109611988e-22],
    [10.16069039073941, 5.258749402384343e-16, 6.384384918184039, -9.688721278516321e-17, 1.28958552076999e-05, -9.425904301819585e-23, -5.09871566017047e-06, -3.6252793950066045e-22, -1.3236548730290237e-05, 2.2725225197006965e-22, 5.553290178194112e-06, -2.1633431154530916e-22],
    [9.381977789616357, 5.04981054201057e-16, 7.481877622304802, 1.2184278061484494e-16, 1.2574506361844106e-06, 6.154557496967645e-23, -3.020387058034138e-05, 5.17598357726641e-22, -5.372028144752526e-07, -2.3277384426040438e-23, 3.121291306994389e-05, 8.693841275177735e-22],
    [8.48528137423857, 7.522300307430131e-16, 8.48528137423857, 7.522300307430131e-16, -6.307713705205455e-05, -2.7996766025859577e-21, -3.899959497178822e-05, -1.991650475833394e-21, 6.605000654623384e-05, -1.8458459728451636e-21, 3.8340115177540535e-05, 2.4635509692537564e-21],
    [7.481877622304802, 1.2184278061484494e-16, 9.381977789616357, 5.04981054201057e-16, -0.00018659011694217487, 2.926402012991169e-21, 7.850662851533809e-05, 3.4698094515636393e-22, 0.00018896916559720385, -1.101343070774965e-20, -8.648368471408941e-05, -4.120954331974409e-21],
    [6.384384918184039, -9.688721278516321e-17, 10.16069039073941, 5.258749402384343e-16, -0.00020157118109627854, -7.298051256877019e-21, 0.0005727076725649845, -3.69443608347405e-20, 0.00018633691788083774, 9.440361594303489e-21, -0.0005925381544238375, 2.2943532577026822e-20],
    [5.206604869410698, -2.211557422355577e-16, 10.81162641482903, -6.812409720868965e-16, 0.0007099302920044044, 4.469628583323154e-20, 0.0018412264698823675, 8.864402020341169e-20, -0.0007909570900357151, -3.945007908881658e-20, -0.0018492218365038927, -5.3998921090351683e-20],
    [3.963348743462005, -1.8240833138032862e-16, 11.32659996370041, 7.538323845230397e-16, 0.005524633273677657, -1.5112021518294717e-19, 0.004046890615142876, 2.0986682074842586e-19, -0.005760915989217134, 8.69735205363329e-20, -0.0038909573115668496, 5.049355184212703e-20],
    [2.670251207475773, -8.509466699838378e-17, 11.699134946181884, -5.919752616575536e-16, 0.02446416297653955, -1.335248039301069e-18, 0.005060556484684129, 3.064644892042488e-19, -0.024912326566725224, 3.2653521007885485e-19, -0.0041278086775650685, -2.2274498252676426e-20],
    [1.3435737132396943, -2.1127444710358223e-17, 11.92454651871891, 1.9878412578790603e-16, 0.09396848979894491, -1.6523113692590749e-18, -0.0072737732174783685, -3.0309999580493323e-19, -0.09418414871454314, 2.2996111310800813e-18, 0.011180292042028184, 7.115743296506744e-19],
    [6.851962196549218e-61, 6.5815046458761126e-77, 12.0, 0.0, 0.3538019433432087, 8.413351755542982e-18, -0.07491019422704633, 1.888712963372478e-18, -0.3509898909668333, 3.806731749170184e-18, 0.08969124230707634, -6.453348751392008e-19],
    [13.0, 0.0, 0.0, 0.0, 7.784543861420496e-07, 2.2089439081512622e-23, 0.0, 0.0, -8.078588412202347e-07, -1.2442857123239423e-23, 0.0, 0.0],
    [12.918258728612154, 6.731973298687733e-17, 1.4555381893430022, -4.384348025802132e-18, 5.0793618816871496e-08, 7.810414996222086e-26, -8.432752916336287e-07, -5.061019679173239e-23, -4.9194391864129804e-08, -3.196577830176348e-24, 8.751488898254138e-07, -3.803652914188161e-23],
    [12.674062858363706, 3.9490162285446303e-16, 2.8927721414320873, -1.817102093990533e-17, -1.068295046231131e-06, -7.670683621885536e-23, -1.4903863374293523e-07, -1.2523237333042315e-23, 1.1089169922011645e-06, -2.471416755947215e-23, 1.4570068974523698e-07, -2.233099080448776e-24],
    [12.270483294008779, -3.675861430335406e-16, 4.293627805417172, 1.354578817255243e-16, -4.05004453907299e-07, -2.642320421998205e-23, 1.5637385865739086e-06, 4.6976117955384665e-24, 4.002753795759136e-07, 1.1994299180330306e-23, -1.6246231034138086e-06, 1.0178048680786068e-22],
    [11.71259528273145, -5.899813164774503e-16, 5.640488608528256, -1.655705191135104e-16, 2.5750842957377327e-06, 9.903815768992098e-24, 1.1567817619178789e-06, -3.631190683483247e-23, -2.681858002331771e-06, 8.523978419364214e-23, -1.1547385359110249e-06, -8.429961107017557e-23],
    [11.007414589967695, -7.625697776252174e-16, 6.916416994699375, 1.170834577411045e-16, 3.5136104424577833e-06, 1.4106907257875592e-22, -4.509756454452303e-06, 6.378700093273168e-23, -3.5373883771150663e-06, -4.532449431888995e-23, 4.724899950715664e-06, -2.3115965870696593e-22],
    [10.163809272084388, -4.5056137748938375e-17, 8.105367424163536, 2.8002608228276955e-16, -7.313315636620651e-06, 3.1067581168921293e-22, -1.110607212741585e-05, 5.607205395369956e-22, 7.790738543949111e-06, -8.001305691397603e-22, 1.126753778860599e-05, 5.797624287814041e-22],
    [9.192388155425117, 3.7082665678820155e-16, 9.192388155425117, 3.7082665678820155e-16, -3.473592350760516e-05, 1.4644325033001712e-21, 5.387022189109071e-06, -1.0861678746834456e-22, 3.5536693399083926e-05, 1.0569172457836032e-21, -6.453723233394954e-06, -2.3369042524777666e-22],
    [8.105367424163536, 2.8002608228276955e-16, 10.163809272084388, -4.5056137748938375e-17, -3.9672217584421816e-05, -3.1624631508335987e-21, 9.647557609503957e-05, 4.288366380378624e-21, 3.779422407087163e-05, 4.2336335167543987e-22, -9.996600648041746e-05, 4.863473292372729e-22],
    [6.916416994699375, 1.170834577411045e-16, 11.007414589967695, -7.625697776252174e-16, 0.00016702783359508812, 1.3248431025723686e-20, 0.0002993607195014024, -1.0686802243194625e-20, -0.0001800433911489141, -1.4581312529175543e-21, -0.0003002369764201861, -1.6282780657223343e-20],
    [5.640488608528256, -1.655705191135104e-16, 11.71259528273145, -5.899813164774503e-16, 0.0011737001995114542, 4.323951052417456e-20, 0.00036454380406526765, -1.8106940058009846e-20, -0.0012061845969269008, -6.841143640948138e-21, -0.0003307907408622399, 2.08531986435768e-20],
    [4.293627805417172, 1.354578817255243e-16, 12.270483294008779, -3.675861430335406e-16, 0.004501450631861709, 5.524062665360574e-20, -0.0014537525794189542, -6.931026866539285e-20, -0.004508945741548391, -3.631411983940759e-19, 0.0016342231761531916, -2.715998406655089e-20],
    [2.8927721414320873, -1.817102093990533e-17, 12.674062858363706, 3.9490162285446303e-16, 0.013774081132520771, -6.050409002955866e-19, -0.013401719613395981, 3.7312893531409103e-19, -0.01340290622038312, -8.357284937339432e-20, 0.014036363946078418, 4.887019773945243e-19],
    [1.4555381893430022, -4.384348025802132e-18, 12.918258728612154, 6.731973298687733e-17, 0.03875321036598999, 7.687500690144453e-19, -0.0710966248118702, 2.8392992394215756e-19, -0.03624506230762016, -3.27251479237659e-19, 0.07292515571427988, 8.632321002322715e-19],
    [7.422959046261654e-61, -3.233438899747545e-77, 13.0, 0.0, 0.12284862632686037, -1.8094330159330053e-18, -0.3250387615318828, -1.8436643359707096e-17, -0.11045533798026155, 1.2416837887977784e-18, 0.32999510467512383, -6.478688551109911e-18],
    [14.0, 0.0, 0.0, 0.0, 2.76137082398162e-07, -2.1616984371291446e-23, 0.0, 0.0, -2.85834365344025e-07, 2.378633520179742e-23, 0.0, 0.0],
    [13.911970938505396, -6.414465981415138e-17, 1.56750266544631, 1.2358748658753959e-17, -1.563519645133445e-08, -1.3009849519119113e-24, -3.0115643827263526e-07, -2.2672242445992264e-23, 1.7346445154749463e-08, -1.3053927542440602e-24, 3.1160837451831264e-07, -1.8189807644002785e-23],
    [13.648990770545531, -3.945783320337708e-16, 3.1152930753884016, 4.875262511857313e-17, -3.909453843563894e-07, -2.5639463241898953e-23, 3.293210652888026e-08, 8.299695405562266e-26, 4.040923915136e-07, 1.560162163438341e-23, -3.7069425510368e-08, -2.8185620438039704e-24],
    [13.214366624317146, 2.8735216881012957e-16, 4.623906867372339, 9.234884981314583e-18, 4.665011620148356e-08, -2.192011217347495e-25, 6.042574855480685e-07, 2.4734203788085426e-23, -5.510856887641511e-08, -9.673359870764164e-25, -6.238064026076313e-07, 5.216108559781298e-25],
    [12.613564150633868, -4.987216608680042e-16, 6.074372347645814, -1.0998529599146312e-16, 1.1054876776873631e-06, -5.516276618315087e-23, -1.3201293156157106e-08, -5.990457793669566e-25, -1.140433420021444e-06, -6.122219596541708e-23, 3.024443129991527e-08, 3.066563397758416e-24],
    [11.854138789195979, -2.7465765608861857e-16, 7.448449071214712, 3.310541282673722e-16, 3.0528184884423035e-07, 7.552581439704724e-24, -2.3438692725312333e-06, -1.3707337881915763e-22, -2.7114154648624485e-07, 2.0705737663710622e-23, 2.4197317087826726e-06, -3.180087567448861e-23],
    [10.945640754552418, -5.950933296989338e-16, 8.728857226022269, 4.382093839506942e-16, -5.480730265648537e-06, 1.6047130871786012e-23, -2.0917814556450793e-06, -9.663884110950325e-23, 5.678260848301222e-06, 3.6383997438201782e-22, 2.0310125671541325e-06, 2.0411861659383947e-22],
    [9.899494936611665, -1.0576717166609988e-17, 9.899494936611665, -1.0576717166609988e-17, -1.0884122374706178e-05, 3.9348140817081324e-22, 1.2678497386727131e-05, -7.794135469366102e-22, 1.0846189309440071e-05, -6.709685352855815e-22, -1.326659754932309e-05, 5.815199969950422e-22],
    [8.728857226022269, 4.382093839506942e-16, 10.945640754552418, -5.950933296989338e-16, 2.060444896141061e-05, 2.2115792416963003e-23, 4.981602316049594e-05, 2.406807394333189e-21, -2.2426506142546256e-05, -7.408617905546734e-22, -5.036758550816016e-05, 1.9071930328447836e-21],
    [7.448449071214712, 3.310541282673722e-16, 11.854138789195979, -2.7465765608861857e-16, 0.00018966316091338382, -4.7946696788542e-21, 4.13402683346689e-05, -1.868629443306375e-21, -0.0001945382310866533, -1.152718603959807e-20, -3.650742818820673e-05, -8.31791490876594e-23],
    [6.074372347645814, -1.0998529599146312e-16, 12.613564150633868, -4.987216608680042e-16, 0.0006334058614696003, -4.93664558336561e-20, -0.00043370843458571, -5.3391038139967844e-21, -0.0006297088541892318, 1.8189329803420698e-20, 0.00046064496819469734, 1.6437931475244954e-20],
    [4.623906867372339, 9.234884981314583e-18, 13.214366624317146, 2.8735216881012957e-16, 0.0010119088837050839, -3.172166013723177e-21, -0.0031168691258186554, 6.751298143274651e-20, -0.0009205401183017186, -5.417662780953707e-20, 0.003188756700544681, -2.2463172663058388e-20],
    [3.1152930753884016, 4.875262511857313e-17, 13.648990770545531, -3.945783320337708e-16, -0.0026030389621677784, 7.191750135191993e-21, -0.014596972669979313, -1.6346772170321407e-19, 0.0031288928155939547, -2.0652064257841966e-19, 0.014631081197686085, -2.284342387704849e-19],
    [1.56750266544631, 1.2358748658753959e-17, 13.911970938505396, -6.414465981415138e-17, -0.033163063950952136, -8.465065964421002e-19, -0.06138539849337864, 1.9429835283817944e-18, 0.03548302731162226, 2.5875470002988744e-18, 0.060496947927984025, -2.2517766408030478e-18],
    [7.993955895974089e-61, 7.694872427799088e-78, 14.0, 0.0, -0.19979361952450211, 4.522254167790754e-18, -0.268721587886343, 2.3355480895317163e-17, 0.20950520308656553, 4.693911917579021e-18, 0.26176510546699183, 6.418949412973487e-18],
    [15.0, 0.0, 0.0, 0.0, 9.819536482396435e-08, -7.087251788827559e-25, 0.0, 0.0, -1.0141729369762092e-07, 1.412887233547138e-24, 0.0, 0.0],
    [14.905683148398639, -1.9560905261518009e-16, 1.6794671415496178, 2.910184534331005e-17, -1.760714740703876e-08, 1.0541628793729818e-24, -1.0646657228744164e-07, -3.6891572006622016e-24, 1.8566723619310443e-08, -7.500723919796893e-25, 1.0987514589874429e-07, -4.992619605599348e-24],
    [14.623918682727354, 5.922985524782458e-16, 3.337814009344716, 1.1567627117705159e-16, -1.3637983651718015e-07, -8.428658417879348e-24, 4.3186991277669724e-08, 2.60868649284355e-24, 1.4043643197437644e-07, -1.819097266619402e-24, -4.555150242556857e-08, -3.2207175260524986e-24],
    [14.158249954625514, -8.340663587464507e-16, 4.954185929327506, -1.1698811176289512e-16, 9.034043084498421e-08, 4.5066212965272754e-24, 2.092834204304834e-07, 1.071850575560834e-23, -9.53826966004069e-08, -6.920403136426627e-25, -2.148152660939544e-07, 2.12823384945302e-24],
    [13.514533018536287, -4.0746200525855804e-16, 6.508256086763372, -5.4400072869415827e-17, 3.915808257472059e-07, -2.590227909324298e-23, -1.872533141214243e-07, 6.446178386918509e-24, -4.005757188343425e-07, 1.1524232914505197e-23, 1.983198372442363e-07, 2.512562365043521e-24],
    [12.700862988424262, 2.1325446544798023e-16, 7.980481147730049, -3.431536209064853e-16, -3.840318254951842e-07, -8.060361637075885e-25, -9.012819863273613e-07, -3.475163989442592e-23, 4.103405836570642e-07, -6.961380272552278e-24, 9.19869289805608e-07, -3.1295647619201485e-23],
    [11.727472237020446, 6.312263177513213e-16, 9.352347027881002, 5.963926856186188e-16, -2.5077237080771213e-06, -1.293002315925798e-22, 6.65032948506394e-07, 1.3984711548612784e-23, 2.5592526447797772e-06, -1.4638921826789264e-23, -7.331125874240266e-07, -1.7234881959177927e-23],
    [10.606601717798213, -3.9198009112142153e-16, 10.606601717798213, -3.9198009112142153e-16, -1.5143472073472068e-08, -1.3622411451624327e-24, 7.962894398377627e-06, 2.5588610604723894e-23, -1.6796948736845e-07, -9.671882093845394e-24, -8.15074977761545e-06, -3.4187905276918964e-22],
    [9.352347027881002, 5.963926856186188e-16, 11.727472237020446, 6.312263177513213e-16, 2.5764382202121015e-05, 1.5796916766328877e-21, 1.078241363102395e-05, -6.480729221048761e-22, -2.6577601354241668e-05, -1.52965937712043e-21, -1.0349575694165708e-05, 2.173091651830623e-22],
    [7.980481147730049, -3.431536209064853e-16, 12.700862988424262, 2.1325446544798023e-16, 8.887337314270329e-05, 1.484714634449943e-21, -6.515100124181735e-05, 2.693910561271196e-21, -8.86612075833688e-05, -2.9265963405476866e-22, 6.878436957968849e-05, -6.6427370770704865e-21],
    [6.508256086763372, -5.4400072869415827e-17, 13.514533018536287, -4.0746200525855804e-16, 3.310557486657445e-05, 3.341816197502331e-21, -0.0004795618640785157, 2.060253894611249e-20, -1.9402959523784373e-05, -4.561473247739037e-22, 0.0004876267340454707, 2.5509438336774486e-20],
    [4.954185929327506, -1.1698811176289512e-16, 14.158249954625514, -8.340663587464507e-16, -0.001341758640750993, -6.519051582210053e-20, -0.0018383355587297389, -3.0181215485853095e-20, 0.0014142435066862463, -2.4909628835532903e-20, 0.0018175853644845652, -4.1430640793669303e-20],
    [3.337814009344716, 1.1567627117705159e-16, 14.623918682727354, 5.922985524782458e-16, -0.01047731750989707, 4.5264211988208486e-20, -0.00466426972937465, -3.1719073114209967e-19, 0.010710346770638268, 6.540920583794544e-19, 0.004363392433010854, 2.3460597014520693e-19],
    [1.6794671415496178, 2.910184534331005e-17, 14.905683148398639, -1.9560905261518009e-16, -0.060072941148630224, -8.560482153596861e-19, -0.0048876929730624855, -2.43762937445136e-19, 0.06048988993529248, -1.8632083904855277e-18, 0.002928068961424057, -9.96062640012743e-20],
    [8.564952745686523e-61, 4.7724133853073625e-77, 15.0, 0.0, -0.322742561505432, -2.4707525221473365e-17, 0.022343749666901058, 1.2624846986843406e-19, 0.3221766704649202, -1.7755300429675346e-17, -0.03310237751256286, 1.7184642845408312e-18],
    [16.0, 0.0, 0.0, 0.0, 3.499411663936499e-08, -2.9512654752033436e-24, 0.0, 0.0, -3.6071571175287797e-08, -3.529407273699496e-25, 0.0, 0.0],
    [15.899395358291882, -3.2707344541620876e-16, 1.7914316176529257, 4.584494202786614e-17, -1.0542640912392804e-08, 6.628717553985511e-25, -3.723585706397172e-08, -2.601178005050605e-24, 1.0991858590617535e-08, -3.713605596153087e-25, 3.833958201742233e-08, 1.1512644403514728e-25],
    [15.598846594909178, -1.97181402409988e-16, 3.5603349433010303, 1.8259991723553003e-16, -4.5121249055627e-08, 1.1697267177966542e-24, 2.639493681358663e-08, 2.7632479377375444e-26, 4.6298683959751014e-08, -1.7169837756499075e-24, -2.749304185750242e-08, -2.8055587130132564e-25],
    [15.102133284933881, -1.7912804690278062e-16, 5.2844649912826736, -2.432111085071048e-16, 5.780494603745566e-08, 6.173332461978315e-25, 6.357006806533206e-08, 4.472273587903642e-24, -6.012705967379964e-08, 4.39635567291438e-24, -6.484150901202041e-08, 2.745609423536255e-25],
    [14.415501886438706, -3.1620234964911187e-16, 6.94213982588093, 1.1851502526314683e-18, 1.0879349737545613e-07, 8.243363523032868e-25, -1.3164139037420186e-07, 5.356760647257841e-24, -1.100860531505592e-07, -6.229639467902695e-24, 1.3674520414758763e-07, -5.065701815850925e-24],
    [13.547587187652546, 7.01166586984579e-16, 8.512513224245385, -1.2918295038021762e-16, -3.274433931495452e-07, -1.7180801091440864e-23, -2.416227841481528e-07, 1.1460777609388252e-23, 3.3995532619145684e-07, -1.087021978175111e-23, 2.426552779728517e-07, -1.965506905343455e-24],
    [12.509303719488477, 8.118912580132588e-17, 9.975836829739736, 7.545759872865434e-16, -7.299737827570562e-07, -2.2058569534642077e-23, 8.884579280180923e-07, -4.525032090679328e-23, 7.308103443548679e-07, 4.7147577185099673e-23, -9.23953172487089e-07, 2.8347635818995386e-23],
    [11.313708498984761, -7.733834650762331e-16, 11.313708498984761, -7.733834650762331e-16, 2.4660283849194354e-06, 6.641047730049129e-23, 2.895056194372862e-06, -1.944892745272166e-22, -2.5830944465192484e-06, -8.431435528714906e-23, -2.9056332813600564e-06, 2.0490651847813209e-22],
    [9.975836829739736, 7.545759872865434e-16, 12.509303719488477, 8.118912580132588e-17, 1.3435392409740257e-05, 4.0038281286520276e-22, -5.4576890979455226e-06, -7.497849412930927e-23, -1.3567470283043227e-05, 2.742802082441942e-22, 5.886535689959394e-06, 2.7650607500389173e-22],
    [8.512513224245385, -1.2918295038021762e-16, 13.547587187652546, 7.01166586984579e-16, 5.70209536345125e-06, 4.1259049278853737e-22, -6.243295510454245e-05, -2.5931241763812725e-21, -4.173089040602019e-06, -1.828855538844042e-22, 6.363082034141642e-05, 1.0980411589865735e-21],
    [6.94213982588093, 1.1851502526314683e-18, 14.415501886438706, -3.1620234964911187e-16, -0.00022311915355174118, -1.1043423838364342e-21, -0.000203036759124993, 1.3177390206418708e-20, 0.0002318440924907335, 9.883158002674733e-21, 0.00019964978337230836, -6.668932987216756e-21],
    [5.2844649912826736, -2.432111085071048e-16, 15.102133284933881, -1.7912804690278062e-16, -0.0015841080469752532, -2.692397876179434e-20, 6.421528820019713e-06, 1.1165671891544558e-22, 0.0016008339175885289, 9.599609503903347e-20, -5.271197791159242e-05, -1.3043342655804079e-21],
    [3.5603349433010303, 1.8259991723553003e-16, 15.598846594909178, -1.97181402409988e-16, -0.007548514821337632, 1.7219426228184903e-19, 0.004696674589739283, -4.8342083643540604e-20, 0.007462175723296853, -2.07774692779029e-20, -0.004959519886630556, -3.9056952543137507e-19],
    [1.7914316176529257, 4.584494202786614e-17, 15.899395358291882, -3.2707344541620876e-16, -0.03190053700426366, -3.1350942554111556e-18, 0.04129395406911688, -2.3813797908228913e-20, 0.030750229033567427, 2.0444444216073705e-19, -0.04244386647226555, 2.4084266427291837e-18],
    [9.135949595398959e-61, -5.042530160316295e-77, 16.0, 0.0, -0.1504995622809396, 2.322438395663727e-18, 0.2747308229733136, 8.25503516350113e-18, 0.14199555148140963, 1.3422508042897535e-17, -0.2795627416307372, 8.404784390942886e-18],
    [17.0, 0.0, 0.0, 0.0, 1.2494664026317731e-08, 5.32212566888285e-25, 0.0, 0.0, -1.2857041671666646e-08, -3.9130512798631703e-25, 0.0, 0.0],
    [16.893107568185123, 1.317819001183013e-15, 1.9033960937562335, 6.258803871242223e-17, -5.259697308773012e-09, 2.805888328930274e-25, -1.2871659193661192e-08, 7.617005005703409e-25, 5.452565255328384e-09, 3.503604903205731e-25, 1.3225860092794417e-08, 5.786546913110402e-25],
    [16.573774507091002, -9.866613572982219e-16, 3.782855877257345, -1.9456564655605414e-16, -1.3978311795386454e-08, 4.5131782684592675e-25, 1.3072187713797434e-08, -5.746090318643598e-25, 1.4290655693755855e-08, -3.374960436796255e-25, -1.353123290081129e-08, -4.12191113806901e-25],
    [16.046016615242248, 4.758102649408896e-16, 5.614744053237841, -3.6943410525131454e-16, 2.8438156644724114e-08, -1.0688852978470687e-24, 1.5626257742366773e-08, 7.890871211145563e-25, -2.936627482443852e-08, 6.540212330697879e-25, -1.57858448157276e-08, 3.080776739242765e-25],
    [15.316470754341125, -2.249426940396657e-16, 7.376023564998488, 5.677037337467876e-17, 1.708532678467228e-08, 6.617975667638082e-25, -6.511789109981218e-08, 7.127162776299476e-25, -1.672312014631926e-08, 1.1844171773546983e-24, 6.703892942983442e-08, 5.711642963042023e-24],
    [14.394311386880831, -5.872781308790727e-16, 9.044545300760722, -8.033906995540752e-16, -1.684511927784139e-07, 4.24403467815242e-24, -1.7490876996539366e-08, -9.81938685307824e-25, 1.7288164998370314e-07, -1.1216759581919364e-23, 1.53489046412407e-08, -1.3064525883169231e-24],
    [13.291135201956507, -4.688480661486695e-16, 10.59932663159847, -8.635975504457825e-16, -3.2674232180756434e-08, 3.1299262401807506e-25, 5.09570348316689e-07, -1.0846779745326773e-23, 2.4281395696773032e-08, 8.07712011259235e-25, -5.218203306921628e-07, -6.636091362400425e-24],
    [12.020815280171307, 6.215700003692059e-16, 12.020815280171307, 6.215700003692059e-16, 1.7971080439777201e-06, -8.507039123517366e-23, 2.860506886206755e-07, 7.01686798568254e-24, -1.840284924240764e-06, -5.727441930093787e-24, -2.55365564342989e-07, -2.0174351080599552e-23],
    [10.59932663159847, -8.635975504457825e-16, 13.291135201956507, -4.688480661486695e-16, 2.9570388510556965e-06, -1.0482336361700584e-22, -6.940260309811459e-06, 2.5002022900842115e-23, -2.8547406815564177e-06, -2.0391131485203738e-22, 7.1348384999045955e-06, 4.21476498382457e-22],
    [9.044545300760722, -8.033906995540752e-16, 14.394311386880831, -5.872781308790727e-16, -2.4515694949931062e-05, 7.090119263582087e-22, -2.6000712181861073e-05, -1.29598979411993e-21, 2.5540830071787062e-05, 6.751263693146061e-22, 2.581074772325748e-05, 7.234042385544188e-22],
    [7.376023564998488, 5.677037337467876e-17, 15.316470754341125, -2.249426940396657e-16, -0.0001871680189465975, -1.0315287440883509e-20, 3.079154481409975e-05, -1.1692518944537516e-21, 0.00018879706256523111, -1.0024179721228702e-20, -3.608786561032646e-05, 1.3221203276448082e-22],
    [5.614744053237841, -3.6943410525131454e-16, 16.046016615242248, 4.758102649408896e-16, -0.0006440880995595785, 3.6420603538728107e-20, 0.0008975522949126221, -3.516801945788269e-20, 0.0006258836075284406, 1.1388908320318832e-20, -0.0009242548683126122, -3.1616479758891755e-20],
    [3.782855877257345, -1.9456564655605414e-16, 16.573774507091002, -9.866613572982219e-16, -0.00026821024946327394, 5.967459672315626e-22, 0.006899900615692063, 1.3111217178164461e-19, 7.363432952454874e-05, 6.451547251993614e-21, -0.006955265343020158, -3.499277698566681e-19],
    [1.9033960937562335, 6.258803871242223e-17, 16.893107568185123, 1.317819001183013e-15, 0.01494126762701335, 3.7725333806180997e-19, 0.04272705243427813, 2.622963329131199e-18, -0.01624030667776913, 2.778501351707617e-19, -0.04245042421998893, 2.0056319286623266e-18],
    [9.706946445111393e-61, -1.039604017788841e-77, 17.0, 0.0, 0.14551417103777198, -2.7197477660214557e-18, 0.26680643536957327, 1.507871339715907e-17, -0.1534173096675158, -1.3655622369203981e-17, -0.26264505649172687, 2.447237446073733e-17],
    [18.0, 0.0, 0.0, 0.0, 4.468753337309383e-09, 1.4741946043765902e-25, 0.0, 0.0, -4.591249627740241e-09, 1.3698971273539696e-25, 0.0, 0.0],
    [17.886819778078365, 1.1863546083819844e-15, 2.0153605698595416, -1.42713469528053e-16, -2.3989406846065723e-09, 1.5670819189415992e-25, -4.3920019570768175e-09, 3.746893812719775e-25, 2.477612109432106e-09, -1.394679747103649e-25, 4.5043947993283255e-09, 3.241341375060728e-25],
    [17.548702419272825, 2.1552721379481513e-19, 4.005376811213659, 3.1644720935248695e-16, -3.94142689822786e-09, -2.4908561136806995e-25, 5.807404006039871e-09, -6.236037200512089e-26, 4.011863402059588e-09, -3.696247780785917e-25, -5.98649901947521e-09, 3.761246744365584e-25],
    [16.989899945550615, 1.1307485767845597e-15, 5.945023115193007, 3.92521317704601e-16, 1.2093746108018569e-08, -5.628735766753633e-25, 2.1014375384303672e-09, 7.947025956340195e-26, -1.2426125383811667e-08, 5.610714789825775e-25, -2.0476804517186586e-09, -1.137105105903989e-25],
    [16.217439622243543, 1.642673800970031e-15, 7.809907304116046, 1.1235559649672605e-16, -4.692608138179311e-09, -2.3358453607952044e-25, -2.616609524607106e-08, -2.68155261108377e-25, 5.116917789849133e-09, 2.5332878785035495e-25, 2.6759558799292206e-08, 1.5395369041687858e-24],
    [15.241035586109115, -9.93660093424738e-17, 9.576577377276058, 2.987583906723178e-16, -6.420984766237808e-08, -6.403821235710012e-24, 2.9352257238444492e-08, -1.2906502305446442e-24, 6.528506230679097e-08, 7.161163368540322e-25, -3.096556679565735e-08, -8.024453668628969e-25],
    [14.072966684424536, 7.574715813015856e-16, 11.222816433457204, -7.054142487778578e-16, 1.205886250012999e-07, -7.173084339544572e-24, 1.9247438521562314e-07, 6.818141742261735e-24, -1.264608743172175e-07, -9.224001436167519e-24, -1.9459106301170201e-07, 1.3023023215130557e-23],
    [12.727922061357855, 2.4016662641439435e-16, 12.727922061357855, 2.4016662641439435e-16, 7.438083958045628e-07, -1.9000568295062174e-23, -4.5554696967910945e-07, -1.2161400987166536e-23, -7.496292887406272e-07, 5.273064883268392e-23, 4.788226263660397e-07, 4.7378646588222694e-23],
    [11.222816433457204, -7.054142487778578e-16, 14.072966684424536, 7.574715813015856e-16, -1.4557847485770654e-06, 1.2628733606300113e-23, -3.6516787562655602e-06, -1.6244503282287666e-22, 1.5590651407500189e-06, -1.8515383346288412e-23, 3.684088694657205e-06, -1.7557692818755165e-22],
    [9.576577377276058, 2.987583906723178e-16, 15.241035586109115, -9.93660093424738e-17, -2.0394193261138685e-05, -3.1541007139942173e-22, 6.582062444603581e-07, 2.691065496339869e-23, 2.0683341635382203e-05, -1.1773105528424842e-21, -1.1406901402367374e-06, -2.2652187984093895e-23],
    [7.809907304116046, 1.1235559649672605e-16, 16.217439622243543, 1.642673800970031e-15, -5.795066895901452e-05, -3.2681562627198002e-21, 0.00010447674901240655, -3.490139018744558e-21, 5.607897699153011e-05, -1.0481718050701763e-21, -0.00010719160994567726, -2.633011327804039e-21],
    [5.945023115193007, 3.92521317704601e-16, 16.989899945550615, 1.1307485767845597e-15, 0.000244091266658183, 9.560684860002259e-21, 0.0007321300542237274, 1.876099465656129e-20, -0.0002654123443630178, 5.303481518134491e-21, -0.0007327155531437506, -4.007076773223843e-20],
    [4.005376811213659, 3.1644720935248695e-16, 17.548702419272825, 2.1552721379481513e-19, 0.004327278893470758, -3.074775862578676e-19, 0.0031838969463641575, -1.170786394769779e-19, -0.004441111226760262, 2.850968230737425e-22, -0.0030882399692572712, 1.389608677326379e-19],
    [2.0153605698595416, -1.42713469528053e-16, 17.886819778078365, 1.1863546083819844e-15, 0.03820201728465196, 2.5165719141757695e-18, 0.009360239200191576, -7.650424555088327e-19, -0.03859225777636764, 1.3335198751453214e-18, -0.008342311437600627, 3.6430291134249556e-19],
    [1.0277943294823828e-60, 2.9633221247386128e-77, 18.0, 0.0, 0.294606243400054, -2.1046826683267874e-17, 0.020979250569478903, 7.191625207417145e-19, -0.29530167558088694, 1.3520628914278367e-18, -0.012810051827156738, 2.9617241852783065e-19],
    [19.0, 0.0, 0.0, 0.0, 1.6006712869293614e-09, 5.095224573040697e-26, 0.0, 0.0, -1.642266970382279e-09, -7.549839836429364e-26, 0.0, 0.0],
    [18.880531987971608, 1.0548902155809557e-15, 2.1273250459628494, -1.259703728434969e-16, -1.0362206709378804e-09, -7.832133993541226e-27, -1.4765352127795563e-09, 6.041801589224498e-26, 1.0672297061459945e-09, 3.92129175382832e-27, 1.5116932675320215e-09, -7.418593470003488e-26],
    [18.523630331454648, 9.870924117258115e-16, 4.227897745169973, 3.833708554109654e-16, -9.410296734750895e-10, 2.625964631316103e-26, 2.399915950324656e-09, 6.011068398644196e-26, 9.511740736795685e-10, 8.475062771654433e-26, -2.466150427362945e-09, -1.882143446626213e-25],
    [17.933783275858985, -1.767026790172271e-15, 6.275302177148174, 2.662983209603913e-16, 4.592322892809991e-09, -4.117683670193179e-25, -7.333065769317925e-10, -2.7407624803580416e-26, -4.698965875346699e-09, 2.5311918378647805e-25, 7.903173520621592e-10, -1.6279754853995804e-26],
    [17.118408490145963, -4.2423382820773365e-17, 8.243791043233605, -7.202376000813519e-16, -6.0352815667326416e-09, 3.3819624998817307e-25, -8.60798571482166e-09, 6.087134655761043e-25, 6.273196318960682e-09, 3.9040963798557693e-25, 8.742881124041728e-09, 5.2510163797640905e-25],
    [16.0877597853374, -1.3878107272061255e-15, 10.108609453791395, -3.754493585015397e-16, -1.688157159224059e-08, -9.452036830173159e-25, 2.4163171380529324e-08, -1.0621391818019608e-24, 1.6923995951378577e-08, -6.975730830036207e-25, -2.4929296797044718e-08, -5.015878438797296e-26],
    [14.854798166892566, 2.0743438935159013e-16, 11.846306235315938, -5.472309471099332e-16, 9.368519852134896e-08, -2.7149894263616717e-24, 3.822603487523664e-08, -2.513399119140687e-24, -9.621977550634738e-08, -5.456200461869427e-24, -3.750231450639663e-08, -1.7563998528521548e-24],
    [13.435028842544403, -1.4123674754041716e-16, 13.435028842544403, -1.4123674754041716e-16, 1.2929300806076211e-07, -1.0018890642468557e-23, -3.9824096753209176e-07, -1.6474559411944635e-24, -1.2441971910696095e-07, 9.379826530467356e-24, 4.0800966250847626e-07, 8.878183099559325e-24],
    [11.846306235315938, -5.472309471099332e-16, 14.854798166892566, 2.0743438935159013e-16, -1.8821445381287102e-06, -5.653333378859729e-23, -8.165743097846497e-07, -3.428768503576105e-23, 1.929674462112205e-06, 1.903036310585735e-22, 7.919182577784849e-07, 2.6381644025707724e-23],
    [10.108609453791395, -3.754493585015397e-16, 16.0877597853374, -1.3878107272061255e-15, -7.441180529270382e-06, 1.6197631956272736e-22, 8.98812800582784e-06, 4.837825554608008e-22, 7.348854809092591e-06, -6.681855958920697e-23, -9.278673042115074e-06, 1.9720573362932056e-22],
    [8.243791043233605, -7.202376000813519e-16, 17.118408490145963, -4.2423382820773365e-17, 2.899097077897093e-05, -1.4908448054819491e-21, 6.956543568350856e-05, 1.5907484750707122e-21, -3.095810157834004e-05, 8.993412627089569e-22, -6.96941058813694e-05, 4.90323260279262e-21],
    [6.275302177148174, 2.662983209603913e-16, 17.933783275858985, -1.767026790172271e-15, 0.0005150685302219292, 4.089515115071469e-20, 0.00016202624093805256, -9.451622791453887e-21, -0.0005236649281214492, 3.6490228568150866e-20, -0.0001507974870552587, 1.51085131221657e-21],
    [4.227897745169973, 3.833708554109654e-16, 18.523630331454648, 9.870924117258115e-16, 0.003945332831724088, 3.6544563156429886e-19, -0.0013997870675574553, 1.690603402615788e-20, -0.003933934465588301, -4.324499179413133e-19, 0.0015089809697549858, 8.889942614754447e-20],
    [2.1273250459628494, -1.259703728434969e-16, 18.880531987971608, 1.0548902155809557e-15, 0.024957194766926327, 1.1104159109959342e-18, -0.023427050892917616, 1.6179468388165946e-18, -0.02442853814519132, 3.2217621789592173e-19, 0.024154121068073915, -1.5884683224305915e-18],
    [1.0848940144536264e-60, -6.8516214208850444e-77, 19.0, 0.0, 0.17203312893980507, 1.1694422929509994e-17, -0.23032498521737405, -2.6667998736868372e-18, -0.16603541977546016, -1.1385424068996872e-17, 0.2349284774904823, -2.2938347216291823e-18],
])

J0_ANCHORS = np.array([
    [8.0, 0.0, 0.0, 0.0, 0.1716508071375539, 4.7971554873569066e-18, 0.0, 0.0, -0.23463634685391463, 4.703493020272432e-18, 0.0, 0.0],
    [7.949697679145941, -1.6353672270810438e-16, 0.8957158088264628, 2.292247101393307e-17, 0.24860983611296744, 8.511198863272276e-18, -0.23378310744591654, 1.1309645743805626e-17, -0.33140234013148123, 1.655203415694386e-17, -0.15337949313519178, -3.503976472744581e-18],
    [7.799423297454589, -9.8590701204994e-17, 1.7801674716505151, 9.129995861776502e-17, 0.5870283807956598, -3.118345335805647e-17, -0.6040049057326041, -2.2142171335285353e-17, -0.6597838677447202, 4.230585186961273e-17, -0.5037072442889402, 5.109397026592563e-17],
    [7.551066642466941, -8.956402345139031e-17, 2.6422324956413368, -1.216055542535524e-16, 1.610605261499177, -5.5102976210136965e-17, -1.1779914185586235, -7.675843196177285e-17, -1.25827499958528, -4.962081957646919e-17, -1.4902779310299354, 3.570054764423918e-17],
    [7.207750943219353, -1.5810117482455594e-16, 3.471069912940465, 5.925751263157341e-19, 4.294643444207919, 2.2234143422433044e-16, -1.5605883553194295, 4.621120841145828e-18, -1.7676066623990845, -4.318224275551294e-17, -4.0856576775538676, 1.343869164588163e-16],
    [6.773793593826273, 3.505832934922895e-16, 4.256256612122693, -6.459147519010881e-17, 10.025287922772565, -4.127430687009009e-16, 0.28354507020489406, 2.7714320660057287e-17, -0.27133575887618644, -1.2082960829621068e-17, -9.715267168700592, -7.019613466895668e-17],
    [6.254651859744238, 4.059456290066294e-17, 4.987918414869868, 3.772879936432717e-16, 18.41554894369762, 1.0244574204969827e-15, 9.834279433003893, 6.36423848995636e-16, 8.523415655313428, -3.261069730037573e-16, -18.209964754192242, 1.6838522733905829e-15],
    [5.656854249492381, -3.8669173253811654e-16, 5.656854249492381, -3.8669173253811654e-16, 20.973955610730258, -1.5340903230543243e-15, 35.016725164881514, -1.4505501256784192e-15, 32.506861295691415, 3.2787400149885056e-15, -21.67353510301148, 3.640435399403145e-16],
    [4.987918414869868, 3.772879936432717e-16, 6.254651859744238, 4.059456290066294e-17, -5.3379237090626335, -4.283807723482343e-16, 74.12503897557717, 2.9801540925263237e-15, 70.7025134242203, 6.9850670781115935e-15, 2.0282747031053856, -2.124038253121549e-16],
    [4.256256612122693, -6.459147519010881e-17, 6.773793593826273, 3.505832934922895e-16, -84.87281853866102, -4.051874410774174e-15, 91.84374492692653, 5.677004449674644e-15, 89.9076010757614, -4.16382277807774e-15, 77.07391041354586, -3.080371936004955e-15],
    [3.471069912940465, 5.925751263157341e-19, 7.207750943219353, -1.5810117482455594e-16, -192.29779424107403, 7.971103898131447e-15, 18.785704089418793, 1.2311560596045742e-16, 23.269310644292148, -1.6055060564300948e-15, 180.68566593886456, -1.976991686116733e-15],
    [2.6422324956413368, -1.216055542535524e-16, 7.551066642466941, -8.956402345139031e-17, -213.06066114408233, 1.0280108670553305e-15, -170.0396647078361, -7.653920036209015e-16, -155.01095406141778, -4.783272723304948e-15, 203.90061400539074, 4.092279976645762e-15],
    [1.7801674716505151, 9.129995861776502e-17, 7.799423297454589, -9.8590701204994e-17, -32.52931971467465, -1.3124493895540636e-15, -348.155358456613, -1.9915553535955117e-14, -325.7631506948331, -2.7260715966491495e-14, 35.691898047438386, -1.0075019716525572e-15],
    [0.8957158088264628, 2.292247101393307e-17, 7.949697679145941, -1.6353672270810438e-16, 272.0749546832673, 7.779144273124855e-15, -302.06805337148086, -1.2917405363809896e-15, -284.6979305834837, 6.29526842422383e-15, -252.30131030373835, -4.122593731691095e-15],
    [4.5679747976994795e-61, -2.5212650801581476e-77, 8.0, 0.0, 427.5641157218048, -1.1344213323405362e-14, -1.8266104031746095e-58, 0.0, -1.724775801477485e-58, 0.0, -399.8731367825601, -2.6933871438035413e-15],
    [9.0, 0.0, 0.0, 0.0, -0.09033361118287614, 4.664846134251492e-18, 0.0, 0.0, -0.24531178657332528, 7.713788781700356e-18, 0.0, 0.0],
    [8.943409889039183, 5.931773041909922e-16, 1.0076802849297708, -7.13567347640265e-17, -0.13496629230760626, -9.169095346135694e-18, -0.2958061213016865, 1.3222577218432128e-18, -0.3813165029782117, -1.053150689969013e-17, 0.12821622743677638, 1.5777242934736266e-18],
    [8.774351209636412, 1.0776360689740756e-19, 2.0026884056068295, 1.5822360467624347e-16, -0.2285594700253344, -8.759378477356782e-18, -0.9429147870651319, -3.6795482377738727e-17, -0.9559617214960747, 5.407626936099929e-17, 0.27730747452711507, 2.243139571137824e-17],
    [8.494949972775308, 5.653742883922799e-16, 2.9725115575965035, 1.962606588523005e-16, -0.024813193463781805, -1.4499748887894355e-18, -2.6022080705298123, 1.9227017946731204e-16, -2.569462497318168, 8.714085342608373e-17, 0.16738488044826627, 9.514740576973941e-18],
    [8.108719811121771, 8.213369004850155e-16, 3.904953652058023, 5.617779824836303e-17, 2.0858904442695425, -7.094288718572221e-17, -6.300800030323312, 4.318415894547625e-16, -6.266645051099346, 4.1965973590283824e-16, -1.71172364977852, -1.0565951200616904e-16],
    [7.620517793054558, -4.96830046712369e-17, 4.788288688638029, 1.493791953361589e-16, 10.972687201190622, -3.9597418409025177e-16, -11.757775158034077, -7.747251286718409e-16, -11.952152549735109, 8.773216528536192e-16, -10.086293870867639, 3.7845205000303504e-16],
    [7.036483342212268, 3.787357906507928e-16, 5.611408216728602, -3.527071243889289e-16, 35.11937304020074, 2.144894215477326e-15, -10.589596988216215, -2.51571876722964e-16, -11.808116063247024, 2.4518068773086857e-16, -33.443954192031434, 2.549149175584098e-15],
    [6.363961030678928, 1.2008331320719718e-16, 6.363961030678928, 1.2008331320719718e-16, 73.93572985761618, -1.231415335002743e-15, 24.712783168678275, -9.492707204513801e-17, 20.719209146253263, -6.864643756018067e-16, -72.05429090321591, -3.523120931694045e-15],
    [5.611408216728602, -3.527071243889289e-16, 7.036483342212268, 3.787357906507928e-16, 80.30933126504715, -1.9445433139206248e-16, 130.13263911029821, 8.123665928729894e-16, 121.53427203606657, -3.733617482694333e-15, -81.5269684652624, 3.4870366948678454e-15],
    [4.788288688638029, 1.493791953361589e-16, 7.620517793054558, -4.96830046712369e-17, -57.97491428665739, 1.5716712018373108e-16, 268.3322027043485, 7.181378860365443e-15, 257.34814261731475, 2.1128998652580998e-14, 46.85502342266467, -3.2658855727678036e-15],
    [3.904953652058023, 5.617779824836303e-17, 8.108719811121771, 8.213369004850155e-16, -385.794239311226, 2.1745321689100563e-14, 227.1989716750178, 1.233697670656501e-14, 225.44545995748052, -1.137222036136995e-14, 360.3064433789257, 1.5293774674193257e-14],
    [2.9725115575965035, 1.962606588523005e-16, 8.494949972775308, 5.653742883922799e-16, -620.986082116299, 2.2132156773596872e-14, -221.4450133388539, -6.483349039960621e-15, -197.43892931110622, 4.709361067653269e-16, 591.931347338067, -5.6196944509058737e-14],
    [2.0026884056068295, 1.5822360467624347e-16, 8.774351209636412, 1.0776360689740756e-19, -271.239010726884, 6.4106087484274015e-15, -829.0429813470752, 1.3526249658119441e-14, -779.2854031948456, -4.480835029615136e-14, 267.0481625286035, 1.8398836280502723e-15],
    [1.0076802849297708, -7.13567347640265e-17, 8.943409889039183, 5.931773041909922e-16, 601.2105631384429, 1.9854341923179705e-14, -840.3927670034991, 4.189355766347628e-14, -796.5595356074127, -5.570246125971351e-14, -561.4177577987394, 4.963017264362538e-14],
    [5.138971647411914e-61, 1.4816610623693064e-77, 9.0, 0.0, 1093.5883545113747, -5.007959850643853e-14, -5.297841522681152e-58, 0.0, -5.031270477865003e-58, 0.0, -1030.9147225169565, 1.0006701491279755e-13],
    [10.0, 0.0, 0.0, 0.0, -0.24593576445134835, 1.353808764108032e-17, 0.0, 0.0, -0.04347274616886144, 1.6619720798015959e-18, 0.0, 0.0],
    [9.937122098932425, 4.617129113899635e-16, 1.1196447610330786, -5.4613638079470406e-17, -0.4154015552714708, -2.2935646410583057e-17, -0.07422001903209212, 6.743929352981188e-18, -0.08076317740566667, 1.6908239337109485e-19, 0.33975705575209847, -2.7098757402063308e-17],
    [9.749279121818237, -7.893721912813365e-16, 2.2252093395631443, -2.189419591153407e-16, -1.1060484486830893, -1.5137222808678353e-17, -0.40592705237953136, -9.739851908168935e-18, -0.36253153850423436, -7.694499477944365e-18, 1.0923494294628315, 7.29438851093046e-17],
    [9.438833303083676, -5.560442391643005e-16, 3.3027906195516707, 7.003766210809079e-17, -2.8139150938726183, -1.2068689043622597e-16, -1.9828482982667155, 6.575618268908061e-17, -1.8250111080874423, 1.1022759673628423e-16, 2.860060568842985, 6.546989997338927e-17],
    [9.009688679024192, -8.637602833057889e-16, 4.3388373911755815, -3.323261884796523e-16, -5.347983314299158, 2.627529493643744e-16, -8.107928197476992, 2.0377182545588414e-16, -7.6967056620310945, -3.005219630931473e-16, 5.6091256338325515, 3.331852714477793e-16],
    [8.467241992282842, -4.499493028347634e-16, 5.320320765153365, 3.633498658624266e-16, -2.519107871598983, -2.1823852506498278e-16, -25.832797705999322, 1.601141261655102e-15, -25.054695757155407, 7.702173051371814e-16, 3.5769741608721675, -1.8802501879000847e-16],
    [7.818314824680298, -1.7130140129920262e-16, 6.2348980185873355, -1.945238227210043e-16, 30.804022901427466, 1.665494966600411e-15, -57.07998815701157, -1.810350116583932e-15, -56.567028454857144, 3.4732829383896215e-15, -27.55259335707038, 1.3331943305771343e-15],
    [7.0710678118654755, -2.6132006074761434e-16, 7.0710678118654755, -2.6132006074761434e-16, 138.84046594163266, -1.0880366333809657e-14, -56.37045855390664, -1.0547867578541257e-15, -59.477610426263325, -3.169250384643121e-15, -131.87863917568694, 1.1646684388049469e-14],
    [6.2348980185873355, -1.945238227210043e-16, 7.818314824680298, -1.7130140129920262e-16, 292.51384569224257, 1.621557303958919e-14, 121.386768850764, -1.1643523703715977e-15, 107.10691844268125, 3.5109008753767057e-15, -284.9664924133188, 2.016472953842712e-14],
    [5.320320765153365, 3.633498658624266e-16, 8.467241992282842, -4.499493028347634e-16, 190.896323783194, -7.043807645457997e-15, 575.7670019785841, 5.387585345810819e-14, 545.7770618859499, -1.727583438915206e-14, -198.76244491143297, -7.142025242685846e-15],
    [4.3388373911755815, -3.323261884796523e-16, 9.009688679024192, -8.637602833057889e-16, -593.0564905327761, -4.621894889783184e-14, 859.5840392308403, -4.744907714087664e-14, 833.7054975046676, 2.1396960506967614e-15, 546.2542124685699, 4.271612542376012e-14],
    [3.3027906195516707, 7.003766210809079e-17, 9.438833303083676, -5.560442391643005e-16, -1604.9651690246521, 4.3894619244990395e-14, -18.758931572704494, -1.0615077384064809e-16, 10.110011608289145, -2.95241601619969e-16, 1527.8669018522205, 3.0164080838012044e-14],
    [2.2252093395631443, -2.189419591153407e-16, 9.749279121818237, -7.893721912813365e-16, -1124.5083810103397, 3.5007250144021304e-14, -1879.7583580961686, 1.0647731841151609e-13, -1772.5678696643984, 1.01571473993477e-13, 1090.4192006855053, 7.787542313955399e-14],
    [1.1196447610330786, -5.4613638079470406e-17, 9.937122098932425, 4.617129113899635e-16, 1287.942492182095, -5.5655716380604537e-14, -2308.9375073449282, -1.5148485621652956e-13, -2198.71572818464, 9.903613285454763e-14, -1208.5096716189946, 6.904053156778794e-14],
    [5.709968497124349e-61, -1.4243476391787953e-77, 10.0, 0.0, 2815.7166284662544, 6.56760772586016e-14, -1.5251258958293642e-57, 0.0, -1.4552527281166369e-57, 0.0, -2670.9883037012546, -4.602771176215656e-14],
    [11.0, 0.0, 0.0, 0.0, -0.1711903004071961, 1.1517499942995043e-17, 0.0, 0.0, 0.17678529895672151, -1.3813609088925659e-17, 0.0, 0.0],
    [10.930834308825668, 3.3024851858893473e-16, 1.2316092371363865, -3.7870541394914316e-17, -0.325279105458432, 2.668597913634723e-17, 0.2644891616316297, -2.487796608013285e-18, 0.32078434139159573, -1.8342329003645018e-18, 0.25626425492903565, 2.1248676127389255e-17],
    [10.72420703400006, 1.9750469323068022e-16, 2.4477302735194586, -1.5201831305686222e-16, -1.1478596921253168, -7.343723157093471e-18, 0.8000562012900823, 4.517148379936605e-17, 0.8519400366278109, -4.739410272811743e-17, 1.0824252777585688, -8.389745936395493e-17],
    [10.382716633392043, 9.889407267936962e-17, 3.633069681506838, -5.618533463611892e-17, -4.322436512996045, -1.2520750364241221e-16, 1.4786310383097343, -3.7423825278561744e-17, 1.6456556746935187, 4.489115482144439e-17, 4.190718935571017, 3.608236368888558e-16],
    [9.910657546926611, -7.725006276963427e-16, 4.77272113029314, -2.76740965357605e-16, -14.23603173265611, 8.422324780148753e-16, -1.2230501999489634, 7.719719888066234e-17, -0.6068522031558752, 4.809784118768905e-18, 14.015039086452813, 1.4999759657538512e-16],
    [9.313966191511126, 3.796281870183548e-17, 5.8523528416687025, -3.1085788331143093e-16, -34.12847298573783, -2.235476090782837e-15, -24.66411684819027, 3.568916173918759e-16, -22.736613676744195, 3.0631652138826503e-16, 34.293752230986826, -2.379322235930617e-15],
    [8.600146307148329, -7.21338593249198e-16, 6.858387820446069, -3.634052105307967e-17, -32.74109551419183, 8.112160671247071e-16, -110.53958500483606, 3.27083240019213e-15, -106.24559700409519, -2.6256738276331905e-15, 35.86719515375718, -2.6557494636553865e-15],
    [7.7781745930520225, 2.4545498499769935e-16, 7.7781745930520225, 2.4545498499769935e-16, 132.95439829016416, 7.151028684299433e-15, -257.20520735051923, 1.3008524183512792e-14, -253.37844005588153, 1.2678334940524563e-14, -120.14276118132666, 6.595083001520291e-15],
    [6.858387820446069, -3.634052105307967e-17, 8.600146307148329, -7.21338593249198e-16, 641.8257982182197, -3.20839196589522e-14, -150.93486559413847, 1.109552528693298e-14, -164.43791556442218, -1.2902094215627097e-14, -614.461757191196, -1.3391354747200389e-14],
    [5.8523528416687025, -3.1085788331143093e-16, 9.313966191511126, 3.796281870183548e-17, 1014.8312229826362, -1.206939607619289e-14, 886.3074520740576, 4.123911204263825e-14, 826.22557941896, 1.0006885926038937e-14, -997.6914588083041, 2.1621375589910414e-14],
    [4.77272113029314, -2.76740965357605e-16, 9.910657546926611, -7.725006276963427e-16, -412.97812600239865, 7.378045552310544e-15, 2413.6918167559065, -3.674035236521863e-14, 2321.773654150347, -2.705741119925059e-14, 345.98299628599864, -2.30844461312792e-15],
    [3.633069681506838, -5.618533463611892e-17, 10.382716633392043, 9.889407267936962e-17, -3730.1455373663057, -1.2986924302422406e-13, 1232.2090237031239, -3.952934265494581e-14, 1237.0420999211121, -4.066065398596347e-14, 3547.4903450926176, 3.5823164036953284e-14],
    [2.4477302735194586, -1.5201831305686222e-16, 10.72420703400006, 1.9750469323068022e-16, -3817.3869521180704, -1.0271996168889552e-13, -4000.7898771732434, -6.866364271337356e-15, -3778.8421995731187, -1.581939831930666e-13, 3686.8981413861993, -2.8830373066060415e-14],
    [1.2316092371363865, -3.7870541394914316e-17, 10.930834308825668, 3.3024851858893473e-16, 2627.6412967785, 1.5713538997982668e-13, -6272.68574641442, 2.1254477340523814e-13, -5996.468694902605, 2.0292577714936406e-13, -2472.4275490716245, 1.975435952947885e-13],
    [6.280965346836784e-61, 2.5785785033486584e-77, 11.0, 0.0, 7288.489339821248, 1.1104886356156302e-13, -4.3645540247256055e-57, 0.0, -4.1810972519271104e-57, 0.0, -6948.858659812163, -3.8955820277394506e-13],
    [12.0, 0.0, 0.0, 0.0, 0.047689310796833535, 1.3240681441307869e-18, 0.0, 0.0, 0.2234471044906276, 1.0764816502670533e-17, 0.0, 0.0],
    [11.92454651871891, 1.9878412578790603e-16, 1.3435737132396943, -2.1127444710358223e-17, 0.08541808777933203, 3.360203227059065e-18, 0.40391958247203197, -1.0660981926097748e-17, 0.45870910888093364, 4.328905423679957e-18, -0.09724353419069198, 3.483264258709914e-18],
    [11.699134946181884, -5.919752616575536e-16, 2.670251207475773, -8.509466699838378e-17, 0.03180358336575442, -2.9488950924613e-18, 1.6584458815172656, -3.795605158904608e-17, 1.6587125754090726, -9.074306909219569e-17, -0.10265439818735111, -2.4091679547912024e-18],
    [11.32659996370041, 7.538323845230397e-16, 3.963348743462005, -1.8240833138032862e-16, -1.7757217467246111, 4.151069222002827e-18, 5.813695838643831, -1.4386646005536722e-16, 5.812200844427431, -2.4146577458222097e-16, 1.5184979707466366, -7.637367296247718e-17],
    [10.81162641482903, -6.812409720868965e-16, 5.206604869410698, -2.211557422355577e-16, -14.457108774820194, -7.317526804124776e-16, 15.373592202338598, -3.2864263911194474e-16, 15.65768545994767, -4.322653592382978e-16, 13.616261334711947, 5.278264683627752e-16],
    [10.16069039073941, 5.258749402384343e-16, 6.384384918184039, -9.688721278516321e-17, -66.92059759567633, 1.4835231216736508e-15, 15.091505538115047, -1.4121082049444462e-17, 17.176926964796667, -1.1769288664661544e-15, 64.92286101377759, -9.686044575688723e-16],
    [9.381977789616357, 5.04981054201057e-16, 7.481877622304802, 1.2184278061484494e-16, -180.57807576762337, 9.017112311599144e-15, -98.69229934267995, 6.002144662808318e-15, -90.11486648529062, 9.603227854322615e-16, 179.23609128004657, 1.4193195548614342e-14],
    [8.48528137423857, 7.522300307430131e-16, 8.48528137423857, 7.522300307430131e-16, -128.5116261565387, 3.137088634699521e-16, -546.9485524542466, -2.4950185060773197e-15, -526.9634358973473, 7.300309600335999e-15, 141.34979335525654, -6.000556367219298e-15],
    [7.481877622304802, 1.2184278061484494e-16, 9.381977789616357, 5.04981054201057e-16, 904.5005770643016, 5.5211463035659385e-14, -1040.358111467446, 4.9429367129383795e-15, -1030.6346891419407, -1.1263858774867848e-13, -846.9193074987102, 5.501873289085178e-15],
    [6.384384918184039, -9.688721278516321e-17, 10.16069039073941, 5.258749402384343e-16, 2954.3568222614176, -7.763267649444602e-14, 553.7164675745481, 3.779284332302065e-14, 465.9435659275692, -2.460553440297779e-14, -2861.8128285406506, 2.273684105938128e-13],
    [5.206604869410698, -2.211557422355577e-16, 10.81162641482903, -6.812409720868965e-16, 1509.9430719823986, 3.0464823048866045e-14, 5565.758115167659, 2.9865417046599146e-13, 5325.29062174587, -1.4756054501948734e-13, -1557.2723692565185, -4.7740095076444675e-14],
    [3.963348743462005, -1.8240833138032862e-16, 11.32659996370041, 7.538323845230397e-16, -7689.19786269454, 3.5247382523505046e-13, 5841.817024666682, 4.494847887704921e-13, 5718.402576633571, -1.6923587680589114e-13, 7297.288465363837, 3.6702091857996113e-13],
    [2.670251207475773, -8.509466699838378e-17, 11.699134946181884, -5.919752616575536e-16, -11681.270696931955, -4.957893008000414e-13, -7755.043711439313, -1.7958109637575536e-13, -7320.122659401741, -2.920454234168802e-13, 11272.12531080617, -1.7846543921861788e-13],
    [1.3435737132396943, -2.1127444710358223e-17, 11.92454651871891, 1.9878412578790603e-16, 4933.307477385063, -1.5287415262225976e-13, -16863.5925804964, 6.360213018652459e-13, -16173.8771443228, -2.711328524736061e-13, -4642.062167823967, 4.183650834750487e-13],
    [6.851962196549218e-61, 6.5815046458761126e-77, 12.0, 0.0, 18948.925349296307, 1.7572668911648965e-12, -1.2430383578988313e-56, 0.0, -1.1947866690505355e-56, 0.0, -18141.348781638833, 1.714384973855456e-12],
    [13.0, 0.0, 0.0, 0.0, 0.20692610237706782, -1.1061262503236783e-17, 0.0, 0.0, 0.07031805212177837, 1.0151981985003439e-19, 0.0, 0.0],
    [12.918258728612154, 6.731973298687733e-17, 1.4555381893430022, -4.384348025802132e-18, 0.46218030757623896, 2.32841553428295e-17, 0.1668133473424432, -3.678140304866142e-18, 0.1731986090462389, 1.779918618736734e-18, -0.4216327799334225, -1.0970392768403977e-17],
    [12.674062858363706, 3.9490162285446303e-16, 2.8927721414320873, -1.817102093990533e-17, 1.6826377975652493, -2.891541893370294e-17, 1.0833134944518534, 9.816588498704647e-17, 1.0200225474006173, 9.636767414734942e-17, -1.7017902498166018, -6.539421663208246e-17],
    [12.270483294008779, -3.675861430335406e-16, 4.293627805417172, 1.354578817255243e-16, 4.908691771384707, -3.618107010836313e-16, 6.474855674159996, -5.335939237357728e-17, 6.219227981876199, -4.278338037727715e-16, -5.086279208139945, 2.2861010145711145e-16],
    [11.71259528273145, -5.899813164774503e-16, 5.640488608528256, -1.655705191135104e-16, 4.5840275291259855, 2.9708951464447454e-16, 30.94217114811278, -8.162072506154722e-17, 30.281152888662078, 8.7109953226804115e-16, -5.599639892318248, -1.5970519957464922e-16],
    [11.007414589967695, -7.625697776252174e-16, 6.916416994699375, 1.170834577411045e-16, -53.923389355221346, -1.917156296815956e-15, 98.34716386096382, -4.442405444694004e-15, 98.16431670540867, 6.959812926368243e-15, 49.57198562721253, -1.7794249567143367e-15],
    [10.163809272084388, -4.5056137748938375e-17, 8.105367424163536, 2.8002608228276955e-16, -354.04963830783436, -2.53162082941494e-14, 102.70744434056671, -2.5313921077605492e-15, 111.17625467505883, 3.2648509874984503e-15, 342.4733274211968, -5.973563607872054e-15],
    [9.192388155425117, 3.7082665678820155e-16, 9.192388155425117, 3.7082665678820155e-16, -882.6466165061366, 6.015171684805226e-15, -646.6356491651396, -3.97314036417378e-15, -604.3881268379251, -3.945637011497244e-14, 876.7737782335106, -2.836552705250599e-14],
    [8.105367424163536, 2.8002608228276955e-16, 10.163809272084388, -4.5056137748938375e-17, 264.6013949653139, -8.802116169610248e-15, -2880.670617128964, -1.6825977434964112e-14, -2800.216015516665, 1.6169123307858182e-13, -185.29796739585615, -1.0921788372291613e-14],
    [6.916416994699375, 1.170834577411045e-16, 11.007414589967695, -7.625697776252174e-16, 6328.088031195174, 2.0136537644183623e-13, -2290.2389670478988, -7.566507649699875e-14, -2349.047111562828, -1.9337235231657694e-13, -6071.516934677611, 1.4189478057681548e-13],
    [5.640488608528256, -1.655705191135104e-16, 11.71259528273145, -5.899813164774503e-16, 8772.870746362738, -6.209114168616929e-13, 10432.314494693488, -6.641351185353558e-13, 9913.863110976054, -3.3125107526929994e-13, -8645.515935364272, 4.476417633491761e-13],
    [4.293627805417172, 1.354578817255243e-16, 12.270483294008779, -3.675861430335406e-16, -13264.605144709554, 5.040919770476406e-13, 19789.802274454883, -1.0811590439870144e-12, 19234.66421938379, -1.0535475913596943e-12, 12513.340258089782, -3.3841731265487235e-13],
    [2.8927721414320873, -1.817102093990533e-17, 12.674062858363706, 3.9490162285446303e-16, -33351.844319946445, -3.0172252319481e-12, -12681.153023057446, 5.71441739077839e-13, -11899.020878628226, -3.964076269887816e-13, 32190.509035915427, 1.1741534514731222e-12],
    [1.4555381893430022, -4.384348025802132e-18, 12.918258728612154, 6.731973298687733e-17, 7821.523144736342, 1.7748676675808955e-13, -44883.93742611947, 1.8975975248077876e-12, -43168.52820795083, 3.5323622605459956e-12, -7314.786221191121, 1.3726438513417815e-13],
    [7.422959046261654e-61, -3.233438899747545e-77, 13.0, 0.0, 49444.489582217575, -1.935220526183731e-12, -3.526127275695097e-56, 0.0, -3.3990036394482225e-56, 0.0, -47502.98735899586, -2.1166548979121786e-12],
    [14.0, 0.0, 0.0, 0.0, 0.17107347611045867, -1.3020585460295603e-17, 0.0, 0.0, -0.13337515469879324, -1.1846053029559976e-17, 0.0, 0.0],
    [13.911970938505396, -6.414465981415138e-17, 1.56750266544631, 1.2358748658753959e-17, 0.43960848395828006, 1.903536267958093e-17, -0.281403875555918, 6.4064031321575995e-18, -0.3172206880273584, -1.0919355301777691e-17, -0.3890078295751622, 3.4397812264973568e-18],
    [13.648990770545531, -3.945783320337708e-16, 3.1152930753884016, 4.875262511857313e-17, 2.2213695087713026, -4.4310650636729e-17, -0.9379526215724574, 5.1875995731527744e-17, -1.0105894214163966, -4.99199970161609e-17, -2.1628672065211254, -6.818007510423894e-17],
    [13.214366624317146, 2.8735216881012957e-16, 4.623906867372339, 9.234884981314583e-18, 10.891284938548674, -5.681038101386019e-16, -0.24306638428571797, -3.018939422369539e-18, -0.6108439828790262, 4.049562680361224e-17, -10.758376277990784, 5.440325087722698e-17],
    [12.613564150633868, -4.987216608680042e-16, 6.074372347645814, -1.0998529599146312e-16, 40.30955184537766, -1.986352105356868e-15, 23.191470761497087, 1.1929101567738025e-15, 21.526229980102666, -4.996662212163587e-16, -40.45992833864912, -1.1933962353694124e-15],
    [11.854138789195979, -2.7465765608861857e-16, 7.448449071214712, 3.310541282673722e-16, 62.34693568948336, -1.601402956240451e-15, 173.04334076968726, -4.043036784959121e-16, 167.89040435518064, 1.00899925441721e-14, -66.5149037522725, -1.3973736120249762e-15],
    [10.945640754552418, -5.950933296989338e-16, 8.728857226022269, 4.382093839506942e-16, -321.0701879051417, 2.7625096052976665e-14, 579.3799843726449, -3.4119810805591206e-14, 575.7574391154357, -1.4133319867748516e-14, 297.43326063173504, -5.093129921861471e-16],
    [9.899494936611665, -1.0576717166609988e-17, 9.899494936611665, -1.0576717166609988e-17, -2131.2811705748777, 1.2982658242518029e-13, 160.93768965248643, -4.493031949174806e-15, 212.12886448935447, 8.170262555619383e-15, 2073.3667437568215, -8.990427463671656e-14],
    [8.728857226022269, 4.382093839506942e-16, 10.945640754552418, -5.950933296989338e-16, -3090.584091085217, -1.869113406883149e-13, -5246.160723798113, -1.0604699792447666e-14, -5028.188151400324, 1.8016764736875052e-13, 3124.2322332784374, -1.645342557391082e-13],
    [7.448449071214712, 3.310541282673722e-16, 11.854138789195979, -2.7465765608861857e-16, 9633.27298080425, 3.6903868313114236e-13, -11645.934367799926, -8.364275531300221e-13, -11479.698094903926, 4.60557993838434e-13, -9110.830306223641, -1.1211486237872775e-13],
    [6.074372347645814, -1.0998529599146312e-16, 12.613564150633868, -4.987216608680042e-16, 29274.95089136761, 1.3254206057878617e-12, 13687.841025425158, -3.203997570214187e-14, 12772.142449801258, 8.948280216137964e-13, -28540.685862857194, 8.281324766938444e-13],
    [4.623906867372339, 9.234884981314583e-18, 13.214366624317146, 2.8735216881012957e-16, -15154.386818692692, -7.241016018769875e-15, 56977.63916694517, -1.759188650028632e-12, 55212.52634731175, 9.454754656842079e-13, 13938.314910848285, 4.088629347227282e-13],
    [3.1152930753884016, 4.875262511857313e-17, 13.648990770545531, -3.945783320337708e-16, -90184.52564654734, -1.1714536493341184e-14, -12768.006430088137, -7.019032961521789e-13, -11570.938210375372, 7.842481439479396e-13, 87094.48112827484, 5.380267323699607e-12],
    [1.56750266544631, 1.2358748658753959e-17, 13.911970938505396, -6.414465981415138e-17, 7162.048405104958, -1.6275933512306748e-13, -118288.59017798681, 4.982000541175232e-12, -114041.07625469386, -3.3065119608028158e-12, -6411.176714092782, -3.0584129859270555e-13],
    [7.993955895974089e-61, 7.694872427799088e-78, 14.0, 0.0, 129418.56270064856, 4.407200213548737e-12, -9.969043255537174e-56, 0.0, -9.63358828957068e-56, 0.0, -124707.25914906985, -6.175752850253126e-12],
    [15.0, 0.0, 0.0, 0.0, -0.014224472826780772, -7.591113698204674e-19, 0.0, 0.0, -0.20510403861352275, -1.224540777001989e-17, 0.0, 0.0],
    [14.905683148398639, -1.9560905261518009e-16, 1.6794671415496178, 2.910184534331005e-17, -0.015518318552028253, -4.904599773116869e-19, -0.5333703565144762, 1.8656057920787622e-17, -0.5694216322171092, 5.374332778545506e-17, 0.036300765163932075, -1.7407504686987877e-18],
    [14.623918682727354, 5.922985524782458e-16, 3.337814009344716, 1.1567627117705159e-16, 0.5634564538782766, -8.533894010530577e-18, -2.8468211220127535, 8.72224235244708e-17, -2.852289432276901, 3.761119040094048e-17, -0.46348715251892075, -2.6782650792202007e-17],
    [14.158249954625514, -8.340663587464507e-16, 4.954185929327506, -1.1698811176289512e-16, 8.315594942098356, -3.3400266683902544e-16, -12.048784415619716, 7.713725787510168e-16, -12.186901330071635, -4.451379883027589e-16, -7.843756453940833, -4.0951638054936205e-16],
    [13.514533018536287, -4.0746200525855804e-16, 6.508256086763372, -5.4400072869415827e-17, 64.38832224845915, -3.725330825669007e-15, -25.67602674299724, -4.198827562132479e-16, -27.275394443303195, -4.720589205380281e-16, -62.69948608814392, -1.4309148536354763e-15],
    [12.700862988424262, 2.1325446544798023e-16, 7.980481147730049, -3.431536209064853e-16, 281.10076034733817, -1.1271646713343263e-14, 111.5304517888234, 1.4954995219006766e-15, 101.50910466807517, -6.766737851622836e-15, -279.3980128971909, -2.3470795282591606e-14],
    [11.727472237020446, 6.312263177513213e-16, 9.352347027881002, 5.963926856186188e-16, 325.5428552989889, -2.415555199496492e-14, 1148.0611625028685, 5.284134848941062e-14, 1115.7204992169677, -9.6202177043471e-14, -349.38671015204403, 1.0539959773507865e-15],
    [10.606601717798213, -3.9198009112142153e-16, 10.606601717798213, -3.9198009112142153e-16, -2967.2545346351294, 1.9172025254169361e-13, 2952.7078873441174, -7.714561499962115e-14, 2954.865291352463, -1.354804728252576e-13, 2826.0936042573826, 6.40236879566363e-14],
    [9.352347027881002, 5.963926856186188e-16, 11.727472237020446, 6.312263177513213e-16, -11761.475955251266, 2.0704118718399153e-13, -5175.1613561407385, -1.519415950777118e-13, -4788.536923672336, -2.9976475671534973e-13, 11564.280807460587, 1.152441869026446e-13],
    [7.980481147730049, -3.431536209064853e-16, 12.700862988424262, 2.1325446544798023e-16, 5378.471806958025, 1.4740716190171025e-13, -33604.840725714224, -2.3401280528560193e-12, -32746.804317229427, -8.376968582505465e-13, -4611.286062068774, -4.1405496651175334e-13],
    [6.508256086763372, -5.4400072869415827e-17, 13.514533018536287, -4.0746200525855804e-16, 76822.22040290787, -6.856848567924355e-12, 244.49259248827863, -6.205406203151428e-15, -910.4658211970228, -1.8051667964298616e-14, -74491.58156869713, -1.7637052628518089e-12],
    [4.954185929327506, -1.1698811176289512e-16, 14.158249954625514, -8.340663587464507e-16, 10313.015293399349, 3.265439032914243e-13, 145930.9573019656, -4.620033906339363e-12, 141155.71525752876, -1.3146295237130873e-11, -11646.212096958287, 5.315302598278926e-13],
    [3.337814009344716, 1.1567627117705159e-16, 14.623918682727354, 5.922985524782458e-16, -232344.78838668228, 4.436400295104533e-12, 19102.774631679447, 1.656938373488953e-13, 20257.411420517095, -5.458618364101093e-13, 224523.6915021106, 1.432561633363273e-11],
    [1.6794671415496178, 2.910184534331005e-17, 14.905683148398639, -1.9560905261518009e-16, -15930.763634387786, 1.1317685511939462e-13, -308649.40610652394, -1.2673179275693401e-11, -298184.92785497254, 1.9427638064827564e-11, 16588.31287891684, 1.2404251204662356e-12],
    [8.564952745686523e-61, 4.7724133853073625e-77, 15.0, 0.0, 339649.3732979139, 6.419185694017088e-12, -2.81037444566337e-55, 0.0, -2.7217225299543144e-55, 0.0, -328124.9219702064, -2.569082071456178e-11],
    [16.0, 0.0, 0.0, 0.0, -0.1748990739836292, 9.278323372652765e-18, 0.0, 0.0, -0.09039717566130419, 2.0046446259178713e-18, 0.0, 0.0],
    [15.899395358291882, -3.2707344541620876e-16, 1.7914316176529257, 4.584494202786614e-17, -0.5248125188989037, 1.7817045597480542e-18, -0.3005108209920043, -9.874986209018577e-18, -0.30358686547282043, -1.3685108931372874e-19, 0.5062867072410324, -6.365062937774246e-18],
    [15.598846594909178, -1.97181402409988e-16, 3.5603349433010303, 1.8259991723553003e-16, -2.474392970551422, -1.159144171064814e-16, -2.493480786004519, 1.0102793387844365e-16, -2.4062428283157375, 1.9922930210866145e-16, 2.5317576720014174, -8.377713234016047e-17],
    [15.102133284933881, -1.7912804690278062e-16, 5.2844649912826736, -2.432111085071048e-16, -6.58273790026286, 1.5299699161055112e-16, -18.587845743162617, -4.292280517856812e-16, -18.208516914134297, 7.164869390690207e-16, 7.071045388994386, 2.9866455135006195e-16],
    [14.415501886438706, -3.1620234964911187e-16, 6.94213982588093, 1.1851502526314683e-18, 29.601528361863416, 1.1973684052835624e-15, -99.23675104224107, -2.623322721374314e-15, -98.76899636645813, 2.2492718735461215e-15, -26.378997519913927, 4.60258281761043e-16],
    [13.547587187652546, 7.01166586984579e-16, 8.512513224245385, -1.2918295038021762e-16, 444.43499703070154, 1.1135468160170707e-14, -225.46848216511242, 1.2476881702655027e-14, -233.73046460787717, 2.9596970828419587e-15, -431.08887618188896, -1.0744287754468185e-14],
    [12.509303719488477, 8.118912580132588e-17, 9.975836829739736, 7.545759872865434e-16, 1878.1614282091896, 9.63437653577019e-14, 1056.0417407558493, 4.2592097640339437e-14, 988.8090205241017, 5.502054592410777e-14, -1868.1443827646722, -4.94661416051609e-14],
    [11.313708498984761, -7.733834650762331e-16, 11.313708498984761, -7.733834650762331e-16, -659.4969043585324, 2.3075913475540154e-14, 8190.710020205595, 2.4117588837936613e-13, 8024.831483670517, -3.0162753031806274e-13, 459.77618096639577, -2.4808337684838822e-14],
    [9.975836829739736, 7.545759872865434e-16, 12.509303719488477, 8.118912580132588e-17, -26586.31963732495, 8.540069453885633e-13, 5648.212299276198, 3.35953523443953e-13, 6041.119344129358, -1.1117599884835842e-13, 25821.40159278974, 1.9225980048163888e-13],
    [8.512513224245385, -1.2918295038021762e-16, 13.547587187652546, 7.01166586984579e-16, -28035.57336464407, 1.1972489794786499e-12, -71509.24620866713, 4.792064831561201e-13, -69122.98926737317, 3.939161171713074e-12, 28510.683150486504, 5.987136312088925e-13],
    [6.94213982588093, 1.1851502526314683e-18, 14.415501886438706, -3.1620234964911187e-16, 166304.48204664805, -5.915051909442954e-12, -76463.50021187261, 4.314999687157626e-12, -76610.79950746908, 6.1020792167923554e-12, -160502.06587919604, -8.199339460370258e-12],
    [5.2844649912826736, -2.432111085071048e-16, 15.102133284933881, -1.7912804690278062e-16, 142031.28116736698, 9.889063886871727e-16, 334974.4548456211, 2.411421166624636e-11, 323447.09589675965, -2.7302146983580443e-11, -141354.37106579076, -1.0562018595580029e-11],
    [3.5603349433010303, 1.8259991723553003e-16, 15.598846594909178, -1.97181402409988e-16, -570523.856217683, -1.2400117296392275e-11, 179417.80580039558, -6.4514046948547315e-12, 177968.59059716764, 3.701486395739239e-12, 551586.6775251082, -6.840376363103542e-12],
    [1.7914316176529257, 4.584494202786614e-17, 15.899395358291882, -3.2707344541620876e-16, -131582.15961067574, 1.4411161277111462e-11, -797101.8963287477, 2.0565099909071068e-11, -771468.0076403855, 1.6714444586351714e-11, 130314.08788292824, -2.8931305728041018e-12],
    [9.135949595398959e-61, -5.042530160316295e-77, 16.0, 0.0, 893446.227920105, 3.473946888174523e-11, -7.903139399924169e-55, 0.0, -7.668533488805469e-55, 0.0, -865059.4358548395, 3.8866288005984936e-11],
    [17.0, 0.0, 0.0, 0.0, -0.16985425215118355, 1.1100463277742745e-18, 0.0, 0.0, 0.09766849275778065, -3.077172569132923e-18, 0.0, 0.0],
    [16.893107568185123, 1.317819001183013e-15, 1.9033960937562335, 6.258803871242223e-17, -0.5988701328666793, -2.5406290791549965e-17, 0.2768824989074498, 2.4018148089125855e-17, 0.3031483614771159, 2.353554308002139e-17, 0.5618288496276075, 4.701883914292069e-17],
    [16.573774507091002, -9.866613572982219e-16, 3.782855877257345, -1.9456564655605414e-16, -4.1870254429284754, 4.062708459335686e-16, 0.7848000507391281, -1.3826822778648174e-17, 0.9005648038767021, -4.169756184720534e-17, 4.1342851568631245, 2.4566159103216823e-16],
    [16.046016615242248, 4.758102649408896e-16, 5.614744053237841, -3.6943410525131454e-16, -25.53264118057024, 1.4074673765201184e-15, -7.5109950533332155, -1.1149730461088379e-16, -6.725837860654797, -2.844751978368499e-16, 25.50362831633396, 7.384863001354075e-16],
    [15.316470754341125, -2.249426940396657e-16, 7.376023564998488, 5.677037337467876e-17, -88.99541347967477, -2.55584786952606e-15, -126.92281298280058, -4.267305319822753e-15, -122.95297132725045, -6.884802063571461e-15, 91.29116011993582, 1.2293350539714757e-15],
    [14.394311386880831, -5.872781308790727e-16, 9.044545300760722, -8.033906995540752e-16, 206.909898889779, -1.4205992050153704e-14, -796.4368719837921, -2.668619919588276e-14, -789.3784885533779, -1.899749433530291e-14, -183.57134090130646, -4.084204355592429e-15],
    [13.291135201956507, -4.688480661486695e-16, 10.59932663159847, -8.635975504457825e-16, 3757.10050634615, -8.498104234775442e-14, -1039.8120717868678, 8.155212904921066e-14, -1108.88568093485, -4.994969007403887e-14, -3664.299693452017, -1.0995545918786019e-13],
    [12.020815280171307, 6.215700003692059e-16, 12.020815280171307, 6.215700003692059e-16, 9484.454401869387, 9.087779365783439e-13, 13087.268169819325, 2.1005246083597207e-13, 12613.836305828672, 3.478886572689541e-13, -9565.470459195363, -2.4521287107254606e-13],
    [10.59932663159847, -8.635975504457825e-16, 13.291135201956507, -4.688480661486695e-16, -38743.066589476686, -4.3605185426038547e-13, 42631.11416060943, -3.5065023206179446e-12, 42375.008541889765, 2.2184636248109063e-12, 37048.201018513544, -2.4363750868932436e-13],
    [9.044545300760722, -8.033906995540752e-16, 14.394311386880831, -5.872781308790727e-16, -136703.0034997079, 7.433969862352612e-12, -107162.92520292201, 1.5946224745067153e-12, -102278.4439238236, 2.6672357500838553e-12, 134995.13691202167, 9.25638272516031e-12],
    [7.376023564998488, 5.677037337467876e-17, 15.316470754341125, -2.249426940396657e-16, 283433.84698385885, -2.358641311518229e-11, -332616.84571592865, 1.9472621768531988e-11, -327432.04303636967, -2.1095486965640057e-11, -271479.0951205755, -9.751954857823785e-12],
    [5.614744053237841, -3.6943410525131454e-16, 16.046016615242248, 4.758102649408896e-16, 605662.5121005583, 3.292375312168023e-11, 674768.5884401873, -4.654871907791726e-11, 649737.1047248521, -4.323465500631006e-11, -595388.2871220142, 5.2129544903067416e-11],
    [3.782855877257345, -1.9456564655605414e-16, 16.573774507091002, -9.866613572982219e-16, -1328555.4815784032, -3.9178735047703384e-11, 773655.1814393604, 3.010356160736375e-11, 760121.2957803055, -8.131464928432662e-12, 1284691.2641156986, -6.291429425590522e-11],
    [1.9033960937562335, 6.258803871242223e-17, 16.893107568185123, 1.317819001183013e-15, -575894.9849290393, 1.530598242613652e-11, -2036246.2482474786, 6.815245217098959e-11, -1973863.388544512, -8.403444027090233e-11, 565726.3943670118, 5.7908242955820216e-11],
    [9.706946445111393e-61, -1.039604017788841e-77, 17.0, 0.0, 2354970.2231682935, -1.0663063429359398e-10, -2.217669933327851e-54, 0.0, -2.155505810547887e-54, 0.0, -2284621.58380808, 2.4938002960821363e-11],
    [18.0, 0.0, 0.0, 0.0, -0.013355805721984111, 6.07210108677592e-19, 0.0, 0.0, 0.18799488548806959, 8.795645870286283e-18, 0.0, 0.0],
    [17.886819778078365, 1.1863546083819844e-15, 2.0153605698595416, -1.42713469528053e-16, -0.09321725457496048, 1.3872949227964819e-18, 0.6880228624776699, 2.024674948269304e-17, 0.7130533753364, -5.3851903473440224e-17, 0.06796337850739176, -3.398675303692695e-19],
    [17.548702419272825, 2.1552721379481513e-19, 4.005376811213659, 3.1644720935248695e-16, -2.0617731280520335, -1.2511198277315942e-16, 4.738721507572087, -1.5899343521906356e-16, 4.770033789654441, -1.5135244046854757e-17, 1.918703991466059, -7.987504889675059e-17],
    [16.989899945550615, 1.1307485767845597e-15, 5.945023115193007, 3.92521317704601e-16, -28.466444105793588, -3.0348071119800955e-16, 22.009335146842975, -8.390836027332753e-16, 22.567424323511666, 1.3684008630899774e-15, 27.631833868387393, -2.7546834069295207e-17],
    [16.217439622243543, 1.642673800970031e-15, 7.809907304116046, 1.1235559649672605e-16, -232.057729328386, 6.34920361047741e-15, -13.45730175353047, 5.928172161609487e-16, -7.422537785185166, -1.6308063038735875e-16, 229.66231117367818, -1.137800518288798e-14],
    [15.241035586109115, -9.93660093424738e-17, 9.576577377276058, 2.987583906723178e-16, -760.5602050989681, 2.8817040757644865e-14, -1128.7849729650218, -1.9126850702473523e-14, -1094.163835908209, -8.485088564262789e-14, 776.4068028317312, 4.458780994044284e-14],
    [14.072966684424536, 7.574715813015856e-16, 11.222816433457204, -7.054142487778578e-16, 3502.208658827921, -1.4999558512078834e-13, -6136.3437561086075, 3.0076759103023574e-14, -6108.1287274901315, -9.46768620732655e-14, -3306.3025400761494, 1.8541198342225816e-14],
    [12.727922061357855, 2.4016662641439435e-16, 12.727922061357855, 2.4016662641439435e-16, 30962.32727977372, 1.0363434245115886e-12, 7454.337021846349, -3.364460997534388e-13, 6687.481582253307, -3.565026627763633e-13, -30504.1056508699, 7.490607030049925e-13],
    [11.222816433457204, -7.054142487778578e-16, 14.072966684424536, 7.574715813015856e-16, -13899.153435476923, 8.637044179636218e-13, 121517.03589231719, 2.808712134620592e-12, 119115.14208584774, -3.37379861884546e-12, 11443.545990286035, -8.090378355586979e-13],
    [9.576577377276058, 2.987583906723178e-16, 15.241035586109115, -9.93660093424738e-17, -390060.9514079658, -8.833930913958974e-12, -52019.53675966607, 2.7060578455438636e-12, -44878.45744937657, 1.336634136079585e-12, 381610.90758094465, 3.722076710171709e-12],
    [7.809907304116046, 1.1235559649672605e-16, 16.217439622243543, 1.642673800970031e-15, 280442.1889648114, 2.491189132289754e-11, -1006847.4883064996, -1.830519465487065e-11, -984873.7876001664, -2.4365142898777666e-11, -260893.354099678, 1.4387240952172881e-11],
    [5.945023115193007, 3.92521317704601e-16, 16.989899945550615, 1.1307485767845597e-15, 1976813.9746751976, -2.5434371631062942e-11, 1102859.244982582, -3.1747916056583716e-11, 1054946.17878498, 4.986449770975903e-11, -1934770.0421410082, -1.1034911677176748e-10],
    [4.005376811213659, 3.1644720935248695e-16, 17.548702419272825, 2.1552721379481513e-19, -2896983.0676343986, 4.699490468328607e-11, 2698535.6582082286, 1.7153675964053458e-10, 2642904.2814146383, -2.803980783732893e-11, 2800297.390790909, 1.9357221984552278e-10],
    [2.0153605698595416, -1.42713469528053e-16, 17.886819778078365, 1.1863546083819844e-15, -2098946.491403202, 1.196614289103238e-10, -5140715.393277179, -1.224859212542687e-10, -4990043.328743793, 4.063151261929376e-10, 2056643.9689069714, -6.097074701267231e-11],
    [1.0277943294823828e-60, 2.9633221247386128e-77, 18.0, 0.0, 6218412.420781003, -3.6141395809652796e-10, -6.21109806563204e-54, 0.0, -6.04618801393802e-54, 0.0, -6043133.242115628, -3.961352647315291e-10],
    [19.0, 0.0, 0.0, 0.0, 0.1466294396596512, 9.174982819894275e-18, 0.0, 0.0, 0.10570143114240926, 3.3906914378039474e-18, 0.0, 0.0],
    [18.880531987971608, 1.0548902155809557e-15, 2.1273250459628494, -1.259703728434969e-16, 0.5928383650044643, -4.911306672188115e-17, 0.4900284554807018, -2.436748859725985e-17, 0.48910892506767384, 1.0438842002512355e-17, -0.5892200228207545, 2.6954826681388582e-17],
    [18.523630331454648, 9.870924117258115e-16, 4.227897745169973, 3.833708554109654e-16, 3.366132989658225, -1.2546151178558259e-16, 5.305684586657186, 4.142546443875614e-16, 5.19202225697845, -2.818248014430213e-16, -3.4834536876740008, 7.514651475565659e-17],
    [17.933783275858985, -1.767026790172271e-15, 6.275302177148174, 2.662983209603913e-16, 1.5400181779431619, -8.486909470221796e-17, 48.699597263751926, 5.706554926111584e-16, 48.25199297765599, 1.075948566578789e-15, -2.7467977648962267, 1.0585506112971075e-16],
    [17.118408490145963, -4.2423382820773365e-17, 8.243791043233605, -7.202376000813519e-16, -232.1323206134189, -1.028978876370408e-14, 260.7456221481037, -4.608762113836645e-15, 263.39475279304315, 1.5170137974430825e-14, 223.28474447209067, -3.8065208264325525e-15],
    [16.0877597853374, -1.3878107272061255e-15, 10.108609453791395, -3.754493585015397e-16, -2235.6425936271676, -2.662369370242437e-15, -294.1676297629723, 4.986557298548257e-15, -239.58469754909115, -1.2890239263299484e-14, 2211.366668673856, 1.9676373852641855e-13],
    [14.854798166892566, 2.0743438935159013e-16, 11.846306235315938, -5.472309471099332e-16, -3340.786069068799, 1.1761271235668295e-13, -12382.909171555539, 8.314206865481056e-13, -12111.02292568517, 4.1977917590425975e-13, 3545.328740524976, -5.248604753420085e-14],
    [13.435028842544403, -1.4123674754041716e-16, 13.435028842544403, -1.4123674754041716e-16, 56003.4505009736, 9.668688824772213e-13, -28527.31543817786, 1.6293390585550962e-12, -29059.11254039806, -1.1213317811460477e-12, -54421.06627038193, -1.2593143804677393e-12],
    [11.846306235315938, -5.472309471099332e-16, 14.854798166892566, 2.0743438935159013e-16, 126941.0561197947, -3.988490636373197e-12, 227018.56403284305, 1.0951006279730488e-11, 220204.60331038956, -1.5915420062024693e-12, -128126.05648642276, 2.2023013966067395e-12],
    [10.108609453791395, -3.754493585015397e-16, 16.0877597853374, -1.3878107272061255e-15, -822544.5870746899, 5.787107041281565e-11, 347442.37158238515, -4.4300390080702505e-12, 351438.30809916154, -1.271805033139991e-11, 799115.8959229434, 4.011242497866641e-11],
    [8.243791043233605, -7.202376000813519e-16, 17.118408490145963, -4.2423382820773365e-17, -404843.70206103753, -2.8191618299787336e-11, -2470771.034670543, -1.419352242314659e-10, -2406907.539260212, -4.76753155216885e-11, 424084.0952662703, 1.920527429308592e-11],
    [6.275302177148174, 2.662983209603913e-16, 17.933783275858985, -1.767026790172271e-15, 5570325.75778751, -3.2166217718765414e-11, 1004841.3553313318, 3.639904708902469e-11, 929887.4963629206, -2.5736748995362302e-11, -5439368.294639802, 1.437097868295341e-11],
    [4.227897745169973, 3.833708554109654e-16, 18.523630331454648, 9.870924117258115e-16, -5751121.005383088, 3.715820886551748e-10, 8438280.838807164, -3.5581562600246687e-10, 8253641.691690274, 5.931382110864501e-12, 5550900.348127779, -1.3529851153279837e-10],
    [2.1273250459628494, -1.259703728434969e-16, 18.880531987971608, 1.0548902155809557e-15, -6992039.200664401, -6.904014960711751e-11, -12809490.001987351, -7.770655951126271e-10, -12448766.148086851, -6.769290533469404e-10, 6845519.98776683, 3.763953783411299e-10],
    [1.0848940144536264e-60, -6.8516214208850444e-77, 19.0, 0.0, 16446190.44061171, 5.010230780476543e-11, -1.7366303996002866e-53, 0.0, -1.6928357558071182e-53, 1.1591269220898192e-69, -16007373.785836995, -8.503940752527295e-10],
])
