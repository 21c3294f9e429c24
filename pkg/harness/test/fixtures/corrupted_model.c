/* tinylight-codegen v1 prefix=tl precision=float32 in_dims=12,10 h1=18 h2=20 out=9 params=1001 */
/* Generated standalone forward pass: linear / ReLU / elementwise sum only. */

#define TL_IN0_DIM 12
#define TL_IN1_DIM 10
#define TL_H1_DIM 18
#define TL_H2_DIM 20
#define TL_OUT_DIM 9

static const float tl_w_in0[216] = {
    9.0e+02f, -0.109625652f, -0.207650095f, -0.0583451353f, 0.00347584975f, 0.0469825864f, 0.167292327f, 0.171755463f,
    -0.212338418f, -0.0646609217f, -0.217224523f, -0.0715237334f, -0.0395130441f, -0.0748271272f, -0.0864645019f, 0.18485792f,
    -0.206171796f, 0.0332703441f, 0.17763941f, -0.0245626234f, 0.00665848283f, -0.221936792f, 0.166068017f, 0.0617139488f,
    0.0725446343f, 0.0633127913f, -0.0571604855f, 0.00854110252f, 0.0574499294f, -0.1021773f, 0.189063832f, -0.0454925522f,
    0.206322372f, 0.135074869f, 0.0404226817f, -0.205858499f, 0.12329039f, 0.00203404319f, -0.0151131246f, 0.147601828f,
    -0.0620445982f, 0.0789109468f, -0.164746419f, 0.0311682262f, -0.21003373f, 0.118622236f, 0.131044164f, 0.202158213f,
    -0.192876354f, -0.132861897f, -0.0152768008f, 0.168908715f, -0.149364352f, 0.134908423f, -0.122891083f, 0.0239247438f,
    0.186563104f, -0.154529706f, 0.043909248f, -0.15617235f, 0.154321924f, -0.0553257614f, -0.168647781f, 0.182990551f,
    0.00581537886f, -0.0248300992f, -0.0313063562f, -0.200931251f, 0.0572884455f, 0.0104219336f, 0.0795475394f, 0.205749974f,
    -0.0893683508f, 0.221594468f, 0.0577917397f, -0.103932753f, -0.197108656f, -0.0266926289f, 0.198986873f, -0.0398220085f,
    0.20891504f, -0.156049699f, 0.101002932f, 0.214839071f, 0.00872729253f, -0.128391355f, 0.0604749881f, 0.185877815f,
    -0.214181617f, 0.15831767f, 0.167058185f, 0.130882382f, 0.00631360337f, 0.170089707f, -0.0502525866f, -0.116470538f,
    0.180637076f, -0.116503969f, 0.070552744f, 0.193831041f, -0.122347139f, 0.00694194855f, 0.201665685f, 0.185801327f,
    -0.141368955f, -0.202743277f, -0.0847155824f, -0.200928748f, -0.221252084f, 0.0546402112f, -0.0013982422f, 0.00437858328f,
    -0.0791405514f, -0.0436040871f, 0.0311793499f, -0.206587061f, -0.0321008824f, -0.221290737f, -0.134825438f, 0.00946578104f,
    -0.111356519f, 0.152128115f, -0.195939735f, -0.210061222f, 0.196032181f, -0.0721534044f, 0.143657714f, 0.218669623f,
    -0.112914756f, 0.155250311f, -0.15643543f, -0.180359408f, -0.158555135f, 0.168250158f, 0.0106168995f, 0.11313498f,
    -0.0612114891f, 0.177338317f, 0.136864871f, -0.173337415f, -0.0395708792f, -0.214566112f, 0.0171713829f, -0.0813914463f,
    0.132853493f, -0.127317816f, -0.21833235f, 0.062483415f, 0.141470701f, 0.209219068f, -0.137534499f, -0.0144314859f,
    0.166725352f, 0.138871819f, -0.143373981f, 0.108568892f, 0.0789203197f, 0.0464113913f, 0.118077844f, -0.110565208f,
    0.139346123f, -0.173198223f, -0.0143399248f, -0.151957795f, -0.137561947f, 0.108123258f, -0.0539133102f, -0.127454072f,
    0.191365242f, 0.021303108f, -0.0696711093f, -0.162444055f, -0.0688434169f, 0.0360690579f, 0.0970837697f, -0.00930361077f,
    0.140971467f, -0.112443015f, 0.0706714094f, 0.0566225275f, -0.0880865753f, 0.0503292419f, 0.085879378f, -0.182688713f,
    0.214102566f, 0.0768157169f, 0.023401117f, -0.0795309842f, 0.0403793566f, -0.0362673886f, 0.200407177f, -0.032803338f,
    0.0579688028f, 0.0423443615f, 0.102854319f, -0.139752761f, 0.0495292582f, 0.133027345f, -0.0990910754f, -0.203955337f,
    -0.133892745f, 0.0184000768f, 0.0402455069f, -0.0892548561f, -0.142861262f, 0.11239592f, 0.0821461454f, 0.14098689f,
    0.0327953883f, 0.169130757f, 0.210888356f, 0.0712299496f, -0.172980011f, 0.029988274f, -0.138075992f, -0.0833062902f
};
static const float tl_b_in0[18] = {
    0.0f, 0.0f, 0.0f, 0.0f, 0.0f, 0.0f, 0.0f, 0.0f,
    0.0f, 0.0f, 0.0f, 0.0f, 0.0f, 0.0f, 0.0f, 0.0f,
    0.0f, 0.0f
};
static const float tl_w_in1[180] = {
    0.167948037f, 0.0746171474f, 0.0698102787f, -0.169554144f, -0.193713292f, 0.188123107f, -0.186641768f, -0.108211137f,
    0.203300819f, -0.0563915484f, 0.194173798f, -0.188955292f, 0.124574184f, 0.179932818f, 0.166867822f, -0.0483259074f,
    -0.135254145f, 0.176302552f, 0.137543038f, 0.0610831678f, -0.132079214f, 0.0751979873f, 0.116992243f, -0.10681913f,
    0.10523092f, 0.0167203303f, 0.158789754f, -0.037138842f, -0.0521087199f, 0.225840658f, -0.200160667f, 0.192720532f,
    -0.0072941808f, 0.134620637f, 0.00299781305f, 0.120800786f, -0.171675771f, 0.149929851f, 0.0294918716f, 0.15301609f,
    0.0365951583f, -0.0896144882f, 0.127982378f, 0.114955179f, 0.128279686f, -0.216021955f, -0.167658538f, -0.17740728f,
    -0.0123122092f, -0.117312737f, -0.146416813f, 0.172867954f, -0.00121048931f, 0.152288362f, 0.123531789f, 0.140499085f,
    0.205904484f, -0.0570056215f, -0.0927237198f, 0.154053837f, 0.15080072f, 0.18358399f, -0.0485966615f, 0.159389243f,
    0.120529413f, -0.149609029f, -0.216383442f, -0.0490174256f, 0.078632012f, -0.148422271f, 0.192087263f, 0.120851822f,
    0.177118972f, -0.0800055712f, -0.055864159f, -0.0593802705f, -0.195557937f, 0.0555137731f, 0.0806393921f, -0.173248008f,
    0.0653763711f, 0.0196134429f, 0.228190973f, 0.0346964672f, -0.0861888975f, -0.12629135f, -0.108383499f, -0.168356344f,
    -0.21269381f, 0.0961560383f, -0.140130937f, 0.102787942f, -0.114443146f, 0.0182949733f, 0.121829107f, -0.144824475f,
    -0.0598390885f, -0.146154493f, -0.146073282f, -0.0520687513f, -0.16294983f, -0.0248707514f, -0.0869203061f, -0.173634604f,
    0.0124695003f, -0.179057479f, -0.0854759663f, 0.161876559f, 0.0340892412f, 0.170014545f, -0.0201319344f, -0.13190262f,
    -0.170777246f, -0.0301755257f, -0.201730639f, 0.138658673f, 0.120122597f, 0.022233f, 0.098449707f, 0.115909062f,
    0.10172376f, -0.216167912f, -0.1004733f, 0.222010151f, 0.0462792926f, 0.0840073824f, 0.0642287508f, 0.181899473f,
    0.0727897882f, -0.11692664f, -0.169792324f, 0.17772156f, 0.00869170763f, 0.0669005141f, 0.119287595f, 0.102599487f,
    0.150595471f, -0.143244162f, -0.0208228584f, 0.00154447532f, 0.00748117594f, 0.20441705f, -0.200718626f, 0.109100059f,
    0.0506119281f, -0.156689346f, -0.184655294f, -0.0787630901f, -0.170959979f, -0.0576906204f, 0.119180776f, 0.102290526f,
    0.102439776f, -0.0548729561f, 0.194686979f, 0.19184278f, -0.205173597f, -0.174455225f, 0.059499491f, -0.124676868f,
    -0.121953383f, -0.0918207541f, -0.186901927f, -0.219094232f, -0.0552785136f, -0.0197080728f, -0.193837881f, 0.0976191908f,
    -0.143114105f, 0.229960367f, -0.0255530868f, 0.15305689f, -0.174340531f, -0.130913347f, 0.22930789f, -0.149841964f,
    0.0167610832f, 0.217524946f, -0.016172478f, -0.153852448f
};
static const float tl_b_in1[18] = {
    0.0f, 0.0f, 0.0f, 0.0f, 0.0f, 0.0f, 0.0f, 0.0f,
    0.0f, 0.0f, 0.0f, 0.0f, 0.0f, 0.0f, 0.0f, 0.0f,
    0.0f, 0.0f
};
static const float tl_w_mid[360] = {
    0.203865379f, -0.0674808696f, 0.0499019176f, -0.0271665491f, -0.0418905951f, -0.10202007f, 0.212913841f, -0.192214906f,
    0.336312681f, -0.251338661f, 0.129784465f, -0.130551711f, 0.280927688f, 0.0397983938f, -0.376337618f, 0.189755559f,
    -0.339171141f, 0.070956409f, -0.312304825f, -0.0495221168f, -0.265565574f, 0.152682394f, 0.0461801067f, 0.0956726447f,
    0.169188559f, 0.064712204f, -0.0333250761f, -0.0186464842f, 0.124281213f, -0.266192973f, 0.0797482505f, 0.0102337925f,
    -0.076886408f, 0.275466919f, 0.367886215f, 0.335791022f, -0.186817423f, 0.240623847f, 0.252630502f, -0.285195589f,
    0.333349705f, 0.266274959f, 0.3434093f, 0.253449231f, -0.370029539f, 0.355953693f, -0.100646175f, 0.0196094941f,
    0.096086964f, -0.0203861222f, 0.216327325f, -0.382527947f, -0.394755602f, -0.330286562f, 0.169752374f, -0.18041347f,
    0.248463288f, 0.0401100293f, 0.33684954f, -0.116337486f, 0.0768039376f, -0.131068289f, -0.365884393f, 0.141532883f,
    -0.0875793472f, 0.309203774f, 0.0364688598f, 0.10411872f, 0.212739334f, -0.385381073f, -0.227423593f, 0.178117529f,
    0.228058532f, -0.179402679f, -0.234649926f, 0.0574171208f, -0.0241942611f, -0.239890784f, -0.316860318f, 0.383128762f,
    -0.135552019f, 0.13482976f, -0.0374951474f, 0.112713754f, 0.286364168f, -0.0976402238f, -0.237350285f, -0.235898286f,
    0.198885083f, -0.033240553f, 0.360290825f, 0.154112846f, -0.202275276f, 0.210356712f, 0.183426976f, 0.00534501625f,
    -0.0372323506f, 0.0657441616f, -0.199061751f, 0.199253753f, 0.347008795f, -0.231233627f, 0.104166187f, -0.0746013224f,
    0.0632114708f, -0.185248181f, -0.145782113f, 0.367200971f, -0.124104872f, -0.267882079f, 0.306918383f, -0.0627421886f,
    -0.284127921f, 0.0859078318f, -0.175884634f, -0.337669492f, 0.372372657f, -0.00720345834f, -0.259331882f, -0.30489859f,
    -0.274074674f, 0.0410869718f, 0.0403295867f, 0.0463507846f, 0.0459553078f, 0.305489033f, 0.164132431f, -0.16757606f,
    -0.193110138f, -0.18307139f, -0.306477875f, 0.279328853f, 0.238011792f, -0.148773938f, -0.0244094953f, -0.298119605f,
    -0.143136382f, -0.265487522f, 0.277480394f, 0.244939819f, 0.0114966799f, 0.213915974f, -0.338422447f, -0.0825851262f,
    0.130921185f, -0.00490076514f, 0.214982718f, -0.154159561f, -0.0495734923f, 0.232408226f, -0.146862671f, 0.20307155f,
    0.148078993f, 0.102442414f, 0.286010116f, 0.305791706f, -0.36420238f, 0.0947034135f, 0.32605648f, -0.150260404f,
    -0.324599922f, -0.345452636f, 0.0740904137f, 0.194143802f, 0.141199097f, 0.147453159f, -0.352292657f, -0.193663284f,
    -0.00854547415f, -0.25107792f, -0.371575683f, -0.129789919f, -0.228549227f, -0.0359925888f, -0.0412681065f, -0.0205418766f,
    -0.0856700912f, 0.251894683f, -0.362174481f, 0.223631248f, 0.369884431f, 0.181070507f, -0.22077553f, -0.095024474f,
    0.066437155f, -0.339113593f, 0.185031459f, -0.343735009f, -0.284729868f, 0.0930845588f, 0.263010174f, -0.335770577f,
    -0.184707239f, 0.287971556f, -0.168475285f, 0.242079407f, -0.275470763f, -0.290002882f, -0.133179545f, -0.387249738f,
    0.0599028207f, -0.385095209f, -0.241952971f, -0.0265268162f, -0.0630774274f, 0.291310519f, 0.252267718f, -0.0612546578f,
    -0.0466244444f, -0.0744554549f, 0.329883844f, -0.292279512f, 0.349056542f, -0.164554685f, -0.154579997f, -0.344446689f,
    -0.332278669f, 0.03571935f, -0.244380504f, 0.295055598f, 0.241329744f, 0.36425966f, 0.300953001f, 0.203016713f,
    -0.251541644f, -0.148640215f, -0.0435557328f, 0.216033593f, 0.111120254f, -0.0654883981f, 0.389260918f, -0.250914991f,
    -0.183947369f, 0.204823509f, -0.336152583f, 0.0753498375f, 0.0539299436f, 0.185715705f, -0.024212949f, -0.268368542f,
    -0.173310488f, -0.0248987172f, -0.240130737f, 0.00290533411f, -0.164791405f, -0.00434953347f, -0.347726375f, 0.166546911f,
    -0.289504766f, 0.251803219f, 0.0889489874f, -0.155830145f, 0.160855874f, 0.107822888f, -0.222914368f, 0.290320516f,
    0.360465348f, -0.0770737976f, 0.335046083f, -0.0351658612f, 0.239843637f, -0.0722631589f, -0.0363260284f, -0.128718659f,
    -0.164568767f, -0.239988506f, 0.145364717f, -0.241934478f, -0.287658304f, -0.269477457f, 0.131911963f, -0.0417102724f,
    -0.294401228f, 0.191073328f, -0.181906328f, 0.291714549f, 0.063106738f, -0.18274872f, -0.341591656f, 0.128550321f,
    0.161202446f, 0.175191641f, 0.198907837f, 0.259729356f, -0.0550383516f, -0.0633847341f, -0.201728672f, -0.288537264f,
    -0.259299934f, 0.336810201f, 0.141782343f, 0.340137184f, 0.250365108f, -0.0967478603f, -0.259897798f, -0.392811984f,
    0.116914786f, -0.101501234f, -0.26124087f, 0.00625409884f, 0.114186451f, 0.0185160637f, 0.164757565f, -0.0946013406f,
    0.396611691f, 0.260706842f, 0.113928854f, -0.141914681f, -0.172190741f, 0.312714815f, 0.0557483248f, -0.176095605f,
    -0.303908646f, 0.178749099f, -0.34724015f, 0.0172613896f, -0.140165567f, 0.0331386216f, -0.0103080822f, -0.265914887f,
    0.358071029f, 0.183460072f, 0.0424849093f, 0.273962915f, -0.117179833f, 0.260333598f, -0.09805049f, 0.213187575f,
    0.366929322f, 0.133768737f, 0.359549284f, 0.316763759f, 0.0127481949f, 0.157693073f, -0.0271880161f, -0.104104467f,
    0.0565227158f, 0.148342624f, 0.0191008393f, -0.28679952f, -0.0528557263f, -0.330000967f, 0.244015217f, 0.22668609f,
    -0.0418187082f, -0.020923363f, 0.109006509f, -0.00947453734f, -0.376862854f, -0.358062953f, 0.0857194141f, 0.143416792f,
    -0.369371563f, -0.0894147605f, -0.226974934f, 0.20666045f, 0.200463608f, 0.0470276959f, 0.195104629f, -0.171234697f
};
static const float tl_b_mid[20] = {
    0.0f, 0.0f, 0.0f, 0.0f, 0.0f, 0.0f, 0.0f, 0.0f,
    0.0f, 0.0f, 0.0f, 0.0f, 0.0f, 0.0f, 0.0f, 0.0f,
    0.0f, 0.0f, 0.0f, 0.0f
};
static const float tl_w_out[180] = {
    -0.407197118f, -0.056510713f, -0.037488807f, -0.0261891056f, 0.179335579f, 0.0957862437f, 0.189632282f, 0.160453483f,
    0.319656223f, -0.257864237f, 0.093220979f, 0.0582078733f, -0.047124777f, 0.233292848f, 0.446338564f, -0.446266234f,
    0.04287754f, 0.434569806f, -0.336499989f, 0.396264732f, 0.215788245f, -0.103599563f, -0.185250714f, 0.409434676f,
    -0.231962308f, 0.107267395f, -0.232764453f, -0.0320247784f, -0.322129637f, 0.162492946f, -0.0611294508f, 0.123759061f,
    -0.416332453f, 0.419152081f, -0.363540739f, 0.333026111f, -0.130535454f, 0.193190068f, 0.452336669f, -0.327664256f,
    -0.423858762f, 0.0192715209f, 0.361785769f, -0.218053803f, -0.0886693448f, 0.0789928287f, -0.022320373f, -0.31233421f,
    -0.399332255f, -0.0870427117f, 0.0921586528f, 0.123653598f, 0.0760901645f, -0.171623915f, -0.199338362f, -0.33504054f,
    0.284610093f, 0.231062055f, 0.0709201023f, 0.184122354f, -0.370070606f, 0.411403388f, 0.00468899123f, -0.424009353f,
    0.429985374f, -0.0808802769f, 0.058676742f, -0.224319518f, -0.149276197f, -0.165522352f, 0.288500518f, -0.447428077f,
    -0.153642073f, 0.178094462f, 0.257729858f, 0.156371951f, -0.13808158f, -0.15655458f, -0.429448098f, 0.128021255f,
    -0.0521136597f, 0.232142389f, -0.337633818f, 0.356408417f, 0.275039911f, 0.0996591747f, -0.45096159f, -0.255456895f,
    0.0171195939f, -0.273320138f, -0.222118333f, 0.369122863f, 0.447579443f, -0.245527193f, 0.0817816556f, -0.422803372f,
    -0.431720942f, -0.441092819f, 0.193276063f, -0.0868339762f, -0.361072242f, -0.212835863f, -0.242191464f, -0.314588785f,
    0.045537889f, -0.340085506f, 0.355441481f, 0.00233922945f, 0.231954694f, -0.370565087f, -0.0428128839f, -0.202040434f,
    0.187931195f, -0.385822982f, 0.12118762f, -0.394040465f, 0.335551739f, -0.0848936811f, -0.153241038f, 0.402804106f,
    -0.17837289f, -0.382054776f, -0.270658106f, -0.363484204f, -0.33743152f, 0.360837847f, 0.352173656f, 0.398419172f,
    0.405496061f, 0.237155125f, 0.427316815f, -0.151675478f, -0.313158393f, 0.175640762f, -0.166697636f, 0.380324304f,
    -0.424815863f, -0.11564891f, -0.114459231f, -0.270766586f, -0.390749872f, 0.366441518f, 0.283962876f, -0.199788734f,
    -0.172364533f, 0.380450517f, 0.400466323f, -0.160848215f, -0.224201605f, -0.426785082f, -0.149691835f, 0.260680199f,
    0.399484664f, 0.214660302f, 0.101535022f, -0.0856124759f, 0.123995945f, -0.272641897f, 0.38837707f, -0.151925638f,
    -0.0432988107f, 0.00363665028f, -0.224593833f, -0.393860757f, -0.113927491f, -0.285132349f, 0.447125286f, -0.0589418523f,
    -0.376132339f, -0.293788046f, -0.367056936f, -0.327931941f, 0.0623991042f, 0.233451188f, -0.358046532f, -0.194138363f,
    -0.268471807f, 0.269213229f, -0.422743767f, -0.413116306f
};
static const float tl_b_out[9] = {
    0.0f, 0.0f, 0.0f, 0.0f, 0.0f, 0.0f, 0.0f, 0.0f,
    0.0f
};

void tl_forward(const float *in0, const float *in1, float *q_out)
{
    float h1[TL_H1_DIM];
    float h2[TL_H2_DIM];
    int i;
    int j;
    for (j = 0; j < TL_H1_DIM; ++j) {
        float s = 0.0f;
        {
            double acc = (double)tl_b_in0[j];
            for (i = 0; i < TL_IN0_DIM; ++i) {
                acc += (double)in0[i] * (double)tl_w_in0[i * TL_H1_DIM + j];
            }
            s += acc > 0.0 ? (float)acc : 0.0f;
        }
        {
            double acc = (double)tl_b_in1[j];
            for (i = 0; i < TL_IN1_DIM; ++i) {
                acc += (double)in1[i] * (double)tl_w_in1[i * TL_H1_DIM + j];
            }
            s += acc > 0.0 ? (float)acc : 0.0f;
        }
        h1[j] = s;
    }
    for (j = 0; j < TL_H2_DIM; ++j) {
        double acc = (double)tl_b_mid[j];
        for (i = 0; i < TL_H1_DIM; ++i) {
            acc += (double)h1[i] * (double)tl_w_mid[i * TL_H2_DIM + j];
        }
        h2[j] = acc > 0.0 ? (float)acc : 0.0f;
    }
    for (j = 0; j < TL_OUT_DIM; ++j) {
        double acc = (double)tl_b_out[j];
        for (i = 0; i < TL_H2_DIM; ++i) {
            acc += (double)h2[i] * (double)tl_w_out[i * TL_OUT_DIM + j];
        }
        q_out[j] = (float)acc;
    }
}

int tl_argmax(const float *q)
{
    int best = 0;
    int k;
    for (k = 1; k < TL_OUT_DIM; ++k) {
        if (q[k] > q[best]) {
            best = k;
        }
    }
    return best;
}
