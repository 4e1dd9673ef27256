#include "pqni/wavelet.hpp"

// Orthonormal scaling (analysis low-pass) filters: sum h = sqrt(2), sum h^2 = 1.
// Each table is checked by the filter-identity tests in tests/test_wavelet.cpp.

namespace pqni::detail {

static const double kDb1[2] = {
    7.07106781186547573e-01, 7.07106781186547573e-01
};

static const double kDb2[4] = {
    4.82962913144534156e-01, 8.36516303737807942e-01, 2.24143868042013389e-01,
    -1.29409522551260370e-01
};

static const double kDb3[6] = {
    3.32670552950082632e-01, 8.06891509311092547e-01, 4.59877502118491543e-01,
    -1.35011020010254584e-01, -8.54412738820266582e-02, 3.52262918857095333e-02
};

static const double kDb4[8] = {
    2.30377813308896506e-01, 7.14846570552915672e-01, 6.30880767929858921e-01,
    -2.79837694168598543e-02, -1.87034811719093086e-01, 3.08413818355607640e-02,
    3.28830116668851966e-02, -1.05974017850690317e-02
};

static const double kDb5[10] = {
    1.60102397974192928e-01, 6.03829269797189649e-01, 7.24308528437772936e-01,
    1.38428145901320743e-01, -2.42294887066382025e-01, -3.22448695846383748e-02,
    7.75714938400457188e-02, -6.24149021279827437e-03, -1.25807519990819988e-02,
    3.33572528547377125e-03
};

static const double kDb6[12] = {
    1.11540743350109467e-01, 4.94623890398453059e-01, 7.51133908021095364e-01,
    3.15250351709197629e-01, -2.26264693965439828e-01, -1.29766867567261940e-01,
    9.75016055873230425e-02, 2.75228655303057269e-02, -3.15820393174860298e-02,
    5.53842201161496126e-04, 4.77725751094551076e-03, -1.07730108530847959e-03
};

static const double kDb7[14] = {
    7.78520540850091841e-02, 3.96539319481917285e-01, 7.29132090846235092e-01,
    4.69782287405193122e-01, -1.43906003928564979e-01, -2.24036184993874982e-01,
    7.13092192668302594e-02, 8.06126091510830783e-02, -3.80299369350144134e-02,
    -1.65745416306668815e-02, 1.25509985560998405e-02, 4.29577972921366515e-04,
    -1.80164070404749085e-03, 3.53713799974520241e-04
};

static const double kDb8[16] = {
    5.44158422431040081e-02, 3.12871590914299946e-01, 6.75630736297289758e-01,
    5.85354683654206731e-01, -1.58291052563493059e-02, -2.84015542961546907e-01,
    4.72484573913282795e-04, 1.28747426620478472e-01, -1.73693010018075474e-02,
    -4.40882539307947546e-02, 1.39810279173982824e-02, 8.74609404740577662e-03,
    -4.87035299345157414e-03, -3.91740373376947050e-04, 6.75449406450569331e-04,
    -1.17476784124769535e-04
};

static const double kDb9[18] = {
    3.80779473638783450e-02, 2.43834674612590341e-01, 6.04823123690111153e-01,
    6.57288078051300517e-01, 1.33197385825007564e-01, -2.93273783279174916e-01,
    -9.68407832229764565e-02, 1.48540749338106376e-01, 3.07256814793333798e-02,
    -6.76328290613299743e-02, 2.50947114831451973e-04, 2.23616621236790956e-02,
    -4.72320475775139716e-03, -4.28150368246343026e-03, 1.84764688305622655e-03,
    2.30385763523195973e-04, -2.51963188942710124e-04, 3.93473203162716026e-05
};

static const double kDb10[20] = {
    2.66700579005555542e-02, 1.88176800077691497e-01, 5.27201188931725628e-01,
    6.88459039453603538e-01, 2.81172343660577473e-01, -2.49846424327315381e-01,
    -1.95946274377377050e-01, 1.27369340335793252e-01, 9.30573646035723484e-02,
    -7.13941471663970817e-02, -2.94575368218758134e-02, 3.32126740593410019e-02,
    3.60655356695616970e-03, -1.07331754833305745e-02, 1.39535174705290106e-03,
    1.99240529518505613e-03, -6.85856694959711619e-04, -1.16466855129285449e-04,
    9.35886703200695919e-05, -1.32642028945212443e-05
};

static const double kDb11[22] = {
    1.86942977614710827e-02, 1.44067021150624502e-01, 4.49899764356045340e-01,
    6.85686774916200559e-01, 4.11964368947907444e-01, -1.62275245027490356e-01,
    -2.74230846817946960e-01, 6.60435881966831978e-02, 1.49812012466378486e-01,
    -4.64799551166841865e-02, -6.64387856950252043e-02, 3.13350902190460759e-02,
    2.08409043601810624e-02, -1.53648209062015994e-02, -3.34085887301444539e-03,
    4.92841765605904134e-03, -3.08592858815143190e-04, -8.93023250666264605e-04,
    2.49152523552823480e-04, 5.44390746993684746e-05, -3.46349841869849956e-05,
    4.49427427723651031e-06
};

static const double kDb12[24] = {
    1.31122579572295183e-02, 1.09566272821185154e-01, 3.77355135214212656e-01,
    6.57198722579307115e-01, 5.15886478427815653e-01, -4.47638856537746280e-02,
    -3.16178453752785527e-01, -2.37792572560697260e-02, 1.82478605927579668e-01,
    5.35956967435215030e-03, -9.64321200965070763e-02, 1.08491302558221848e-02,
    4.15462774950844382e-02, -1.22186490697482799e-02, -1.28408251983006833e-02,
    6.71149900879550957e-03, 2.24860724099523778e-03, -2.17950361862776030e-03,
    6.54512821250959586e-06, 3.88653062820931434e-04, -8.85041092082043202e-05,
    -2.42415457570307852e-05, 1.27769522193797666e-05, -1.52907175806851093e-06
};

static const double kDb13[26] = {
    9.20213353896236728e-03, 8.28612438729027789e-02, 3.11996322160438044e-01,
    6.11055851158787688e-01, 5.88889570431218923e-01, 8.69857261796472409e-02,
    -3.14972907711388639e-01, -1.24576730750815254e-01, 1.79476079429339852e-01,
    7.29489336567771679e-02, -1.05807618187934327e-01, -2.64884064753436940e-02,
    5.61394771002834275e-02, 2.37997225405907863e-03, -2.38314207103236496e-02,
    3.92394144879741613e-03, 7.25558940161756625e-03, -2.76191123465686222e-03,
    -1.31567391189229893e-03, 9.32326130867263347e-04, 4.92515251262894642e-05,
    -1.65128988556505489e-04, 3.06785375793254965e-05, 1.04419305714081377e-05,
    -4.70041647936086831e-06, 5.22003509845486436e-07
};

static const double kDb14[28] = {
    6.46115346008794764e-03, 6.23647588493988977e-02, 2.54850267792621377e-01,
    5.54305617940893836e-01, 6.31187849104856813e-01, 2.18670687758906523e-01,
    -2.71688552278748052e-01, -2.18033529993276048e-01, 1.38395213864806604e-01,
    1.39989016584460696e-01, -8.67484115681696893e-02, -7.15489555040461356e-02,
    5.52371262592160420e-02, 2.69814083079129158e-02, -3.01853515403906342e-02,
    -5.61504953035695930e-03, 1.27894932663334092e-02, -7.46218989268384973e-04,
    -3.84963886802218739e-03, 1.06169108560676194e-03, 7.08021154235527863e-04,
    -3.86831947312954504e-04, -4.17772457703725965e-05, 6.87550425269750935e-05,
    -1.03372091845707742e-05, -4.38970490178139422e-06, 1.72499467536781268e-06,
    -1.78713996831135919e-07
};

static const double kDb15[30] = {
    4.53853736157889924e-03, 4.67433948927662712e-02, 2.06023863986995737e-01,
    4.92631771708139599e-01, 6.45813140357424320e-01, 3.39002535454731524e-01,
    -1.93204139609145426e-01, -2.88882596566965633e-01, 6.52829528487728211e-02,
    1.90146714007122991e-01, -3.96661765557909454e-02, -1.11120936037231693e-01,
    3.38771439235076854e-02, 5.47805505845076132e-02, -2.57670073284399642e-02,
    -2.08100501696930826e-02, 1.50839180278359020e-02, 5.10100036040754285e-03,
    -6.48773456031574540e-03, -2.41756490761624272e-04, 1.94332398038221145e-03,
    -3.73482354137616977e-04, -3.59565244362468795e-04, 1.55896489920599735e-04,
    2.57926991553189358e-05, -2.81332962660478136e-05, 3.36298718173758000e-06,
    1.81127040794057719e-06, -6.31688232588166450e-07, 6.13335991330575202e-08
};

static const double kDb16[32] = {
    3.18922092534773809e-03, 3.49077143236733445e-02, 1.65064283488853131e-01,
    4.30312722846003803e-01, 6.37356332083788946e-01, 4.40290256886356923e-01,
    -8.97510894024896450e-02, -3.27063310527917706e-01, -2.79182081330282758e-02,
    2.11190693947104297e-01, 2.73402637527160423e-02, -1.32388305563810399e-01,
    -6.23972275247487197e-03, 7.59242360442763109e-02, -7.58897436885773782e-03,
    -3.68883976917301418e-02, 1.02976596409559695e-02, 1.39937688598287310e-02,
    -6.99001456341391634e-03, -3.64427962149838991e-03, 3.12802338120626898e-03,
    4.07896980849712851e-04, -9.41021749359567563e-04, 1.14241520038722391e-04,
    1.74787245225338170e-04, -6.10359662141093598e-05, -1.39456689882088926e-05,
    1.13366086612762581e-05, -1.04357134231160655e-06, -7.36365678545120508e-07,
    2.30878408685754574e-07, -2.10933963010074312e-08
};

static const double kDb17[34] = {
    2.24180700103731277e-03, 2.59853937036060439e-02, 1.31214903307824399e-01,
    3.70350724152641142e-01, 6.10996615684622824e-01, 5.18315764056937800e-01,
    2.73149704032936355e-02, -3.28320748363961745e-01, -1.26599752215882710e-01,
    1.97310589565010991e-01, 1.01135489177470270e-01, -1.26815691778286305e-01,
    -5.70914196316769304e-02, 8.11059866541608832e-02, 2.23123361781037977e-02,
    -4.69224383892697383e-02, -3.27095553581929375e-03, 2.27336765839462711e-02,
    -3.04298998135463716e-03, -8.60292152032285547e-03, 2.96799669152609472e-03,
    2.30120524215354566e-03, -1.43684530480297622e-03, -3.28132519409837971e-04,
    4.39465427768643690e-04, -2.56101095665484581e-05, -8.20480320245339150e-05,
    2.31868137987459522e-05, 6.99060098507675146e-06, -4.50594247722298836e-06,
    3.01654960999455729e-07, 2.95770093331685689e-07, -8.42394844600267961e-08,
    7.26749296856160849e-09
};

static const double kDb18[36] = {
    1.57631021844076053e-03, 1.92885317241463759e-02, 1.03588465822423592e-01,
    3.14678941337031726e-01, 5.71826807766607215e-01, 5.71801654888651312e-01,
    1.47223111969928155e-01, -2.93654040736558763e-01, -2.16480934005142983e-01,
    1.49533975565377786e-01, 1.67081312763257411e-01, -9.23318841508462829e-02,
    -1.06752246659828492e-01, 6.48872162119054491e-02, 5.70512477385368838e-02,
    -4.45261419029823260e-02, -2.37332103958600021e-02, 2.66707059264705906e-02,
    6.26216795430570728e-03, -1.30514809466120013e-02, 1.18630033858117462e-04,
    4.94334360546673773e-03, -1.11873266699249714e-03, -1.34059629833610658e-03,
    6.28465682965145735e-04, 2.13581561910340700e-04, -1.98648552311747958e-04,
    -1.53591712353472464e-07, 3.74123788074003850e-05, -8.52060253744669594e-06,
    -3.33263447888582197e-06, 1.76871298362761550e-06, -7.69163268988517661e-08,
    -1.17609876702823172e-07, 3.06883586304517494e-08, -2.50793445494859831e-09
};

static const double kDb19[38] = {
    1.10866976318171060e-03, 1.42810984507643970e-02, 8.12781132654595562e-02,
    2.64388431740896768e-01, 5.24436377464654879e-01, 6.01704549127537902e-01,
    2.60894952651038847e-01, -2.28091394215482635e-01, -2.85838631755826245e-01,
    7.46522697081032638e-02, 2.12349743306278482e-01, -3.35185419023028772e-02,
    -1.42785695038736588e-01, 2.75843506256286675e-02, 8.69067555558122318e-02,
    -2.65012362501230413e-02, -4.56742262772309102e-02, 2.16237674095850485e-02,
    1.93755498891761274e-02, -1.39883886785351422e-02, -5.86692228101217458e-03,
    7.04074736710524288e-03, 7.68954359257548376e-04, -2.68755180070158212e-03,
    3.41808653458595751e-04, 7.35802520505435221e-04, -2.60676135678627996e-04,
    -1.24600791734158777e-04, 8.71127046721992292e-05, 5.10595048707388623e-06,
    -1.66401762971549446e-05, 3.01096431629652654e-06, 1.53193147669119301e-06,
    -6.86275565776914270e-07, 1.44708829879784453e-08, 4.63693777578260454e-08,
    -1.11640206703582589e-08, 8.66684883899761893e-10
};

static const double kDb20[40] = {
    7.79953613666846293e-04, 1.05493946249503989e-02, 6.34237804590815218e-02,
    2.19942113551397034e-01, 4.72696185310901684e-01, 6.10493238938593863e-01,
    3.61502298739331041e-01, -1.39212088011483881e-01, -3.26786800434034963e-01,
    -1.67270883090770081e-02, 2.28291050819916325e-01, 3.98502464577712018e-02,
    -1.55458750707267945e-01, -2.47168273386135853e-02, 1.02291719174442561e-01,
    5.63224685730743559e-03, -6.17228996246804579e-02, 5.87468181181182662e-03,
    3.22942995307695796e-02, -8.78932492390156056e-03, -1.38105261371519201e-02,
    6.72162730225945703e-03, 4.42054238704579078e-03, -3.58149425960962260e-03,
    -8.31562172822556929e-04, 1.39255961932313642e-03, -5.34975984399769483e-05,
    -3.85104748699217631e-04, 1.01532889736702909e-04, 6.77428082837773011e-05,
    -3.71058618339471284e-05, -4.37614386218399715e-06, 7.24124828767362047e-06,
    -1.01199401001888617e-06, -6.84707959700055740e-07, 2.63392422627000128e-07,
    2.01432202355051265e-10, -1.81484324829969604e-08, 4.05612705555183281e-09,
    -2.99883648961931942e-10
};

static const double kSym2[4] = {
    4.82962913144690253e-01, 8.36516303737468991e-01, 2.24143868041857347e-01,
    -1.29409522550921446e-01
};

static const double kSym3[6] = {
    3.32670552950956877e-01, 8.06891509313338751e-01, 4.59877502119331316e-01,
    -1.35011020010390836e-01, -8.54412738822414863e-02, 3.52262918821006563e-02
};

static const double kSym4[8] = {
    3.22231006040427023e-02, -1.26039672620378330e-02, -9.92195435768472161e-02,
    2.97857795605277365e-01, 8.03738751805916141e-01, 4.97618667632015454e-01,
    -2.96355276459985099e-02, -7.57657147892733251e-02
};

static const double kSym5[10] = {
    1.95388827352867278e-02, -2.11018340247588546e-02, -1.75328089908450474e-01,
    1.66021057645223194e-02, 6.33978963458211919e-01, 7.23407690402420589e-01,
    1.99397533977393598e-01, -3.91342493023830937e-02, 2.95194909257746434e-02,
    2.73330683450779821e-02
};

static const double kSym6[12] = {
    -7.80070832503414798e-03, 1.76771186424280356e-03, 4.47249017706657787e-02,
    -2.10602925123005644e-02, -7.26375227864625161e-02, 3.37929421727621804e-01,
    7.87641141030194003e-01, 4.91055941926746620e-01, -4.83117425856329982e-02,
    -1.17990111148190566e-01, 3.49071208421747022e-03, 1.54041093270273731e-02
};

static const double kSym7[14] = {
    1.02681767085112553e-02, 4.01024487153366343e-03, -1.07808237703817741e-01,
    -1.40047240442961518e-01, 2.88629631751514626e-01, 7.67764317003164054e-01,
    5.36101917091762803e-01, 1.74412550868558273e-02, -4.95528349371272547e-02,
    6.78926935013726973e-02, 3.05155131659635703e-02, -1.26363034032519299e-02,
    -1.04738488868291626e-03, 2.68181456825787807e-03
};

static const double kSym8[16] = {
    1.88995033275946088e-03, -3.02920514721366800e-04, -1.49522583370482309e-02,
    3.80875201389061510e-03, 4.91371796736075062e-02, -2.72190299170560028e-02,
    -5.19458381077090373e-02, 3.64441894835331404e-01, 7.77185751700523508e-01,
    4.81359651258372212e-01, -6.12733590676585241e-02, -1.43294238350809705e-01,
    7.60748732491760542e-03, 3.16950878114929807e-02, -5.42132331791148124e-04,
    -3.38241595100612557e-03
};

static const double kSym9[18] = {
    1.06949003290860529e-03, -4.73154498680083112e-04, -1.02640640276331421e-02,
    8.85926749340048419e-03, 6.20777893028860300e-02, -1.82337707793959851e-02,
    -1.91550831297285118e-01, 3.52724880352718942e-02, 6.17338449140935830e-01,
    7.17897082764411998e-01, 2.38760914607303004e-01, -5.45689584308340705e-02,
    5.83462746125806841e-04, 3.02248788582756799e-02, -1.15282102076792303e-02,
    -1.32719677818171188e-02, 6.19780888985586756e-04, 1.40091552591468070e-03
};

static const double kSym10[20] = {
    -4.59329421004658781e-04, 5.70360836184942842e-05, 4.59317358531182839e-03,
    -8.04358932016544913e-04, -2.03549398123112901e-02, 5.76491203358190860e-03,
    4.99949720773766870e-02, -3.19900568824278003e-02, -3.55367404738175519e-02,
    3.83826761067085465e-01, 7.69510037021107096e-01, 4.71690666938439251e-01,
    -7.08805357832438532e-02, -1.59494278884917573e-01, 1.16098939037113814e-02,
    4.59272392310922026e-02, -1.46538258130505129e-03, -8.64129927702242222e-03,
    9.56326707228947543e-05, 7.70159809114490113e-04
};

static const double kSym11[22] = {
    4.89263610261923875e-04, 1.10535097642721529e-04, -6.38960366645489192e-03,
    -2.00347190010938866e-03, 4.30001906815522805e-02, 3.52667595644665516e-02,
    -1.44602343705315606e-01, -2.04654794495800596e-01, 2.37689909049248971e-01,
    7.30343549088395716e-01, 5.72022978010087058e-01, 9.71983944589094734e-02,
    -2.28326510225626868e-02, 6.99767996107341361e-02, 3.70374159788594004e-02,
    -2.40808415958640026e-02, -9.85793482878979423e-03, 6.51249567477144974e-03,
    5.88352735396991452e-04, -1.73436626729786916e-03, -3.87956557361585660e-05,
    1.71721950699348541e-04
};

static const double kSym12[24] = {
    -1.79066586975086913e-04, -1.81580788626175146e-05, 2.35029761418346483e-03,
    3.07647796310594535e-04, -1.45898364492341448e-02, -2.60439103133223255e-03,
    5.78041794455056573e-02, 1.53017406224788405e-02, -1.70370697238864915e-01,
    -7.83326223163432200e-02, 4.62741031219272347e-01, 7.63479097783657190e-01,
    3.98885972390220001e-01, -2.21623061703378164e-02, -3.58488307369543915e-02,
    4.91793182996608375e-02, 7.55378061168047749e-03, -2.42207226750134445e-02,
    -1.40890924432975529e-03, 7.41496551765425099e-03, 1.80214090085381882e-04,
    -1.34975575557153872e-03, -1.13539280415414516e-05, 1.11967194246560332e-04
};

static const double kSym13[26] = {
    7.04298669069440162e-05, 3.69053734231962412e-05, -7.21364385136228302e-04,
    4.13261198841960637e-04, 5.67485376012243949e-03, -1.49244727425985315e-03,
    -2.07496863255156767e-02, 1.76182968806530837e-02, 9.29260308991371187e-02,
    8.81975767042054645e-03, -1.40490093113634029e-01, 1.10230223021372170e-01,
    6.44564383901185645e-01, 6.95739150561496378e-01, 1.97704818771178015e-01,
    -1.24362460751530110e-01, -5.97506277179436981e-02, 1.38624974358492054e-02,
    -1.72116427262990479e-02, -2.02167681333898300e-02, 5.29635973872502521e-03,
    7.52622538996809958e-03, -1.70942858530222111e-04, -1.13606343892811833e-03,
    -3.57386236486890085e-05, 6.82032526307531877e-05
};

static const double kSym14[28] = {
    4.46189779914752646e-05, 1.93290169655239165e-05, -6.05760182466433456e-04,
    -7.32142135670239906e-05, 4.53267747194564807e-03, 1.01314198718420825e-03,
    -1.94393142636267134e-02, -2.36504883674038512e-03, 6.98276163618075513e-02,
    2.58985875310466691e-02, -1.59997411146522051e-01, -5.81118233177178312e-02,
    4.75335762634206627e-01, 7.59976241961090926e-01, 3.93201521962088851e-01,
    -3.53181121149797328e-02, -5.76344983513269946e-02, 3.74330883628534519e-02,
    4.28052049901937823e-03, -2.91962177640381869e-02, -2.75377479122407114e-03,
    1.00376937176722691e-02, 3.66476573660118289e-04, -2.57944172593307800e-03,
    -6.28654248147763624e-05, 3.98435672975943353e-04, 1.12108658088903614e-05,
    -2.58790902653978860e-05
};

static const double kSym15[30] = {
    2.86607085253180806e-05, 2.17178901507789189e-05, -4.02168537602934828e-04,
    -1.08154401685455251e-04, 3.48102873706489496e-03, 1.52613827818199829e-03,
    -1.71712527816387309e-02, -8.74478888647795168e-03, 6.79698290448791792e-02,
    6.83933100604802446e-02, -1.34056298456253886e-01, -1.96626358766237297e-01,
    2.43962705432166305e-01, 7.21843029636181188e-01, 5.78640415215034509e-01,
    1.11533695142618725e-01, -4.10826666353824796e-02, 4.07354796968106767e-02,
    2.19376427197539546e-02, -3.88767168768334934e-02, -1.94050114309344685e-02,
    1.00799770879056692e-02, 3.42345073635124102e-03, -3.59016544737264173e-03,
    -2.67316446471805680e-04, 1.07056721946239587e-03, 5.51225478555866533e-05,
    -1.60661866374953426e-04, -7.35966679891946959e-06, 9.71241973796334781e-06
};

static const double kSym16[32] = {
    -1.07979821043197948e-05, -5.39648317931524194e-06, 1.65456795791084826e-04,
    3.65659248334822300e-05, -1.33872060669219654e-03, -2.22116476211763232e-04,
    6.93776113080270956e-03, 1.35984474248417204e-03, -2.49527580462901230e-02,
    -3.51027506837400891e-03, 7.80378529034199131e-02, 3.07211390633015599e-02,
    -1.59592192185205983e-01, -5.40406013876061353e-02, 4.75342806011522734e-01,
    7.56524987875697108e-01, 3.97122933620644158e-01, -3.45742284169725037e-02,
    -6.69830490702177789e-02, 3.23330916106637847e-02, 4.86927440490460706e-03,
    -3.10512028435530642e-02, -3.12651717227100745e-03, 1.26667316598573481e-02,
    7.18211978831789235e-04, -3.88091225260387860e-03, -1.08445622308968797e-04,
    8.52354710804709517e-04, 2.80785821284428936e-05, -1.09431479295297573e-04,
    -3.11355640762196918e-06, 6.23000670122076063e-06
};

static const double kSym17[34] = {
    3.79125319433212655e-06, -2.45271634258329995e-06, -7.60712440560512852e-05,
    2.52079331408287786e-05, 7.19827064214897104e-04, 5.84004286940525838e-05,
    -3.93232527979790226e-03, -1.90540768985266590e-03, 1.23969883666487264e-02,
    9.95298252350959763e-03, -1.80388972419192398e-02, -7.26163475092876740e-03,
    1.61588087259193457e-02, -8.60708747207333813e-02, -1.55076005349748247e-01,
    1.80539584581112855e-01, 6.81488995344925019e-01, 6.50716629204545649e-01,
    1.42398350414678188e-01, -1.18566932611436360e-01, 1.72711782105185001e-02,
    1.04754614842232113e-01, 1.79039522143411185e-02, -3.32913834923593277e-02,
    -4.81921280317614779e-03, 1.04823669330315287e-02, 8.56770070191574095e-04,
    -2.74167597568160176e-03, -1.38642302680454992e-04, 4.75996380263866905e-04,
    -1.35063833999011647e-05, -6.29370259755419187e-05, 2.78012669384141375e-06,
    4.29734332734598296e-06
};

static const double kSym18[36] = {
    -1.51315306923715873e-06, 7.84729805583176461e-07, 2.95574376209308111e-05,
    -9.85881603014005803e-06, -2.65830110242410410e-04, 4.74161451837366705e-05,
    1.42808632708327958e-03, -1.88776239407556073e-04, -5.23978968302660827e-03,
    1.08778478959569293e-03, 1.50123563442502127e-02, -3.26074420007498337e-03,
    -3.17126847318145375e-02, 6.27794455431169435e-03, 2.85295970390378080e-02,
    -7.37992072906071689e-02, -3.24805732901386757e-02, 4.01483860570618134e-01,
    7.53629140101792827e-01, 4.73969059893939559e-01, -5.20291589839527863e-02,
    -1.59938148669324071e-01, 3.39956671039473579e-02, 8.42199299703865478e-02,
    -5.07708516075705291e-03, -3.03250910893696039e-02, 1.64298639727821589e-03,
    9.50216439096236536e-03, -4.11521109235977556e-04, -2.31387181450609918e-03,
    7.02127345903626849e-05, 3.96168406382547533e-04, -1.40209925777267549e-05,
    -4.52467578749498565e-05, 1.35491576183211398e-06, 2.61261255648364226e-06
};

static const double kSym19[38] = {
    1.75093679953486871e-06, 2.06231706323956876e-06, -2.81511386615502445e-05,
    -1.68213870293737159e-05, 2.76218776857340721e-04, 1.29307676507014145e-04,
    -1.70496026116499712e-03, -6.17922327798310763e-04, 8.26223695552825467e-03,
    4.31935187489496889e-03, -2.77098969313112516e-02, -1.69082348613452046e-02,
    8.40726762792450427e-02, 9.36308434158971414e-02, -1.16241730107396746e-01,
    -1.76596866252030971e-01, 2.58266169237283627e-01, 7.19555525716394251e-01,
    5.78144945338605054e-01, 1.09025825081277811e-01, -6.75250580402940864e-02,
    8.95459117304362416e-03, 7.01557385717415955e-03, -4.66359835349389462e-02,
    -2.26519933782459507e-02, 1.57974392956746305e-02, 7.96843832061330630e-03,
    -5.12220500258301400e-03, -1.16070325720624861e-03, 2.12142502818233030e-03,
    1.59158047680849378e-04, -6.35764515004334026e-04, -4.61203960021058684e-05,
    1.15539233335787899e-04, 8.87331217372928629e-06, -1.18805182698239836e-05,
    -6.46365130334596331e-07, 5.48773276821583824e-07
};

static const double kSym20[40] = {
    -6.32912904477639464e-07, -3.25670264201744066e-07, 1.22872527779612005e-05,
    4.52542220915163616e-06, -1.17391335162914662e-04, -2.66155503355160859e-05,
    7.47610859782057188e-04, 1.25440917230672591e-04, -3.47164780284407335e-03,
    -6.11126385799208799e-04, 1.21570409487857366e-02, 1.93859706724020019e-03,
    -3.53733367566042359e-02, -6.84370196506922743e-03, 8.89196680281995611e-02,
    3.62509516539330778e-02, -1.60578298415252535e-01, -5.10883429210673978e-02,
    4.71991475101487035e-01, 7.51162728422730019e-01, 4.05831444348450587e-01,
    -2.98193688803337284e-02, -7.89943449283981580e-02, 2.55793495094139463e-02,
    8.12322835600968150e-03, -3.16294371449579656e-02, -3.31385738362335912e-03,
    1.70040490233903385e-02, 1.42308735946214534e-03, -6.60658579908886094e-03,
    -3.05262831795728099e-04, 2.08899470819019816e-03, 7.21599118807403491e-05,
    -4.94731091567265479e-04, -1.92841230064520398e-05, 7.99296783577248103e-05,
    3.02566606273696612e-06, -7.91936141197699896e-06, -1.90156758905541056e-07,
    3.69553747483522098e-07
};

static const double kCoif1[6] = {
    -7.27326195125264502e-02, 3.37897662457481818e-01, 8.52572020211600390e-01,
    3.84864846864857779e-01, -7.27326195125264502e-02, -1.56557281357919929e-02
};

static const double kCoif2[12] = {
    1.63873364632036410e-02, -4.14649367868717769e-02, -6.73725547237255945e-02,
    3.86110066822762887e-01, 8.12723635449413506e-01, 4.17005184423239084e-01,
    -7.64885990782807612e-02, -5.94344186464310920e-02, 2.36801719468477702e-02,
    5.61143481936883428e-03, -1.82320887091103230e-03, -7.20549445520346976e-04
};

static const double kCoif3[18] = {
    -3.79351286438080193e-03, 7.78259642567274632e-03, 2.34526961420771680e-02,
    -6.57719112814693641e-02, -6.11233900029725524e-02, 4.05176902409118245e-01,
    7.93777222626087187e-01, 4.28483476377369998e-01, -7.17998216191548383e-02,
    -8.23019271062998270e-02, 3.45550275732977377e-02, 1.58805448636694518e-02,
    -9.00797613673062422e-03, -2.57451768813679724e-03, 1.11751877083063030e-03,
    4.66216959820402882e-04, -7.09833025063790038e-05, -3.45997731972727806e-05
};

static const double kCoif4[24] = {
    8.92313902537002972e-04, -1.62949242522678604e-03, -7.34616793626805074e-03,
    1.60689471315750287e-02, 2.66823046696048304e-02, -8.12667102491937271e-02,
    -5.60773196035692575e-02, 4.15308427000682268e-01, 7.82238934424282606e-01,
    4.34386033114356529e-01, -6.66274723668171670e-02, -9.62204245359526422e-02,
    3.93344226055891491e-02, 2.50822533379496115e-02, -1.52117281876972110e-02,
    -5.65828380013088349e-03, 3.75143469714608662e-03, 1.26656107892566031e-03,
    -5.89020224633216537e-04, -2.59974337122256816e-04, 6.23388543127871916e-05,
    3.12298615991952647e-05, -3.25964794003075104e-06, -1.78499091449334685e-06
};

static const double kCoif5[30] = {
    -2.12081862067494000e-04, 3.58577741161757678e-04, 2.17829437784569473e-03,
    -4.15931262757864018e-03, -1.01315848469002764e-02, 2.34083221189277831e-02,
    2.81697442705323535e-02, -9.19215880600860874e-02, -5.20466702535547637e-02,
    4.21571266730754346e-01, 7.74293622860327435e-01, 4.37982306659163378e-01,
    -6.20377515749819600e-02, -1.05563151307337233e-01, 4.12875304721178338e-02,
    3.26747994670573555e-02, -1.97583916009654650e-02, -9.15950733867616253e-03,
    6.76152022062041693e-03, 2.43157544253828862e-03, -1.66162730392987882e-03,
    -6.37558926125881154e-04, 3.01857941668244784e-04, 1.40356328123732431e-04,
    -4.12198619242655010e-05, -2.12702216725156143e-05, 3.70072771133947962e-06,
    2.06122039857887835e-06, -1.62379951720483376e-07, -9.60401011276789415e-08
};

std::span<const double> scaling_filter_table(WaveletFamily family, int order) {
    switch (family) {
    case WaveletFamily::Daubechies:
        switch (order) {
        case 1: return kDb1;
        case 2: return kDb2;
        case 3: return kDb3;
        case 4: return kDb4;
        case 5: return kDb5;
        case 6: return kDb6;
        case 7: return kDb7;
        case 8: return kDb8;
        case 9: return kDb9;
        case 10: return kDb10;
        case 11: return kDb11;
        case 12: return kDb12;
        case 13: return kDb13;
        case 14: return kDb14;
        case 15: return kDb15;
        case 16: return kDb16;
        case 17: return kDb17;
        case 18: return kDb18;
        case 19: return kDb19;
        case 20: return kDb20;
        default: return {};
        }
    case WaveletFamily::Symlet:
        switch (order) {
        case 2: return kSym2;
        case 3: return kSym3;
        case 4: return kSym4;
        case 5: return kSym5;
        case 6: return kSym6;
        case 7: return kSym7;
        case 8: return kSym8;
        case 9: return kSym9;
        case 10: return kSym10;
        case 11: return kSym11;
        case 12: return kSym12;
        case 13: return kSym13;
        case 14: return kSym14;
        case 15: return kSym15;
        case 16: return kSym16;
        case 17: return kSym17;
        case 18: return kSym18;
        case 19: return kSym19;
        case 20: return kSym20;
        default: return {};
        }
    case WaveletFamily::Coiflet:
        switch (order) {
        case 1: return kCoif1;
        case 2: return kCoif2;
        case 3: return kCoif3;
        case 4: return kCoif4;
        case 5: return kCoif5;
        default: return {};
        }
    }
    return {};
}

}  // namespace pqni::detail
