"""Embedded spherical t-designs: equal-weight quadrature point sets.

A degree-t design integrates all spherical polynomials up to degree t
exactly as the plain mean over its points.  The two larger sets were
found by antipodally-symmetric least-squares optimization; worst-case
quadrature residual over all harmonics of degree <= t is below 1e-13.
"""
from __future__ import annotations

import numpy as np

__all__ = ["TDesign", "tdesign", "design_for_order", "AVAILABLE_DEGREES"]

T3_6 = (
    (np.float64(1.0), np.float64(0.0), np.float64(0.0)),
    (np.float64(-1.0), np.float64(0.0), np.float64(0.0)),
    (np.float64(0.0), np.float64(1.0), np.float64(0.0)),
    (np.float64(0.0), np.float64(-1.0), np.float64(0.0)),
    (np.float64(0.0), np.float64(0.0), np.float64(1.0)),
    (np.float64(0.0), np.float64(0.0), np.float64(-1.0)),
)

T5_12 = (
    (np.float64(0.0), np.float64(0.5257311121191336), np.float64(0.85065080835204)),
    (np.float64(0.5257311121191336), np.float64(0.85065080835204), np.float64(0.0)),
    (np.float64(0.85065080835204), np.float64(0.0), np.float64(0.5257311121191336)),
    (np.float64(0.0), np.float64(0.5257311121191336), np.float64(-0.85065080835204)),
    (np.float64(0.5257311121191336), np.float64(-0.85065080835204), np.float64(0.0)),
    (np.float64(-0.85065080835204), np.float64(0.0), np.float64(0.5257311121191336)),
    (np.float64(0.0), np.float64(-0.5257311121191336), np.float64(0.85065080835204)),
    (np.float64(-0.5257311121191336), np.float64(0.85065080835204), np.float64(0.0)),
    (np.float64(0.85065080835204), np.float64(0.0), np.float64(-0.5257311121191336)),
    (np.float64(0.0), np.float64(-0.5257311121191336), np.float64(-0.85065080835204)),
    (np.float64(-0.5257311121191336), np.float64(-0.85065080835204), np.float64(0.0)),
    (np.float64(-0.85065080835204), np.float64(0.0), np.float64(-0.5257311121191336)),
)

T9_48 = (
    (np.float64(-0.798572358008072), np.float64(0.5656772851936898), np.float64(-0.2056487248716227)),
    (np.float64(0.5108314273037917), np.float64(-0.30805775769577676), np.float64(-0.8025905997469824)),
    (np.float64(-0.2777041319023496), np.float64(-0.8319416519590503), np.float64(0.4803680910093935)),
    (np.float64(0.058546156175182794), np.float64(-0.9839325686693261), np.float64(-0.16866845558341081)),
    (np.float64(0.7474356369449047), np.float64(0.5769631562283887), np.float64(-0.3293227671749108)),
    (np.float64(0.21369023957440386), np.float64(0.39292216892046883), np.float64(0.8943984853975708)),
    (np.float64(0.8923600984299348), np.float64(0.44812796684508815), np.float64(0.05361697549661581)),
    (np.float64(-0.17163431765898515), np.float64(0.8239883074716222), np.float64(-0.5399860462565546)),
    (np.float64(-0.49369687262927175), np.float64(0.01422416839598301), np.float64(-0.8695177232176002)),
    (np.float64(0.5523362315346428), np.float64(-0.5264324151664233), np.float64(0.6463695534260224)),
    (np.float64(-0.1787383003615945), np.float64(0.10084122398359595), np.float64(0.9787153148537825)),
    (np.float64(0.39747745081472446), np.float64(-0.7241300620843417), np.float64(-0.5636021019119388)),
    (np.float64(0.8905512190542354), np.float64(-0.14886697799041712), np.float64(-0.42983386221308334)),
    (np.float64(0.12548412724368993), np.float64(-0.3572831066661754), np.float64(0.9255282359284647)),
    (np.float64(0.3221237172366802), np.float64(0.4464446483607542), np.float64(-0.8348194336164354)),
    (np.float64(0.38520708351701555), np.float64(-0.9172119428222076), np.float64(0.10167474982819608)),
    (np.float64(0.7419553162560231), np.float64(-0.6209188856418082), np.float64(-0.2529071887724024)),
    (np.float64(0.3910162808195047), np.float64(0.9200857407435754), np.float64(-0.02342003019700088)),
    (np.float64(-0.7298396815845657), np.float64(-0.36870186608459155), np.float64(-0.5756674153799913)),
    (np.float64(-0.7078851563831313), np.float64(-0.22296946040689747), np.float64(0.6702113286854279)),
    (np.float64(-0.8771462084153029), np.float64(0.10384489843226456), np.float64(-0.4688611373661189)),
    (np.float64(-0.5295319676151886), np.float64(-0.7492100359667778), np.float64(-0.3978444636792705)),
    (np.float64(-0.07171374600228808), np.float64(-0.7513965992583767), np.float64(-0.6559422911028576)),
    (np.float64(0.9994413488816295), np.float64(-0.03300066628082474), np.float64(-0.005286413783498334)),
    (np.float64(0.798572358008072), np.float64(-0.5656772851936898), np.float64(0.2056487248716227)),
    (np.float64(-0.5108314273037917), np.float64(0.30805775769577676), np.float64(0.8025905997469824)),
    (np.float64(0.2777041319023496), np.float64(0.8319416519590503), np.float64(-0.4803680910093935)),
    (np.float64(-0.058546156175182794), np.float64(0.9839325686693261), np.float64(0.16866845558341081)),
    (np.float64(-0.7474356369449047), np.float64(-0.5769631562283887), np.float64(0.3293227671749108)),
    (np.float64(-0.21369023957440386), np.float64(-0.39292216892046883), np.float64(-0.8943984853975708)),
    (np.float64(-0.8923600984299348), np.float64(-0.44812796684508815), np.float64(-0.05361697549661581)),
    (np.float64(0.17163431765898515), np.float64(-0.8239883074716222), np.float64(0.5399860462565546)),
    (np.float64(0.49369687262927175), np.float64(-0.01422416839598301), np.float64(0.8695177232176002)),
    (np.float64(-0.5523362315346428), np.float64(0.5264324151664233), np.float64(-0.6463695534260224)),
    (np.float64(0.1787383003615945), np.float64(-0.10084122398359595), np.float64(-0.9787153148537825)),
    (np.float64(-0.39747745081472446), np.float64(0.7241300620843417), np.float64(0.5636021019119388)),
    (np.float64(-0.8905512190542354), np.float64(0.14886697799041712), np.float64(0.42983386221308334)),
    (np.float64(-0.12548412724368993), np.float64(0.3572831066661754), np.float64(-0.9255282359284647)),
    (np.float64(-0.3221237172366802), np.float64(-0.4464446483607542), np.float64(0.8348194336164354)),
    (np.float64(-0.38520708351701555), np.float64(0.9172119428222076), np.float64(-0.10167474982819608)),
    (np.float64(-0.7419553162560231), np.float64(0.6209188856418082), np.float64(0.2529071887724024)),
    (np.float64(-0.3910162808195047), np.float64(-0.9200857407435754), np.float64(0.02342003019700088)),
    (np.float64(0.7298396815845657), np.float64(0.36870186608459155), np.float64(0.5756674153799913)),
    (np.float64(0.7078851563831313), np.float64(0.22296946040689747), np.float64(-0.6702113286854279)),
    (np.float64(0.8771462084153029), np.float64(-0.10384489843226456), np.float64(0.4688611373661189)),
    (np.float64(0.5295319676151886), np.float64(0.7492100359667778), np.float64(0.3978444636792705)),
    (np.float64(0.07171374600228808), np.float64(0.7513965992583767), np.float64(0.6559422911028576)),
    (np.float64(-0.9994413488816295), np.float64(0.03300066628082474), np.float64(0.005286413783498334)),
)

T21_240 = (
    (np.float64(0.9958964276082933), np.float64(-0.07181230824241973), np.float64(0.055075383447916834)),
    (np.float64(-0.703004603801793), np.float64(0.710706129910683), np.float64(0.026102182683894908)),
    (np.float64(0.02980372967326808), np.float64(-0.9995273844426737), np.float64(-0.007532957370787426)),
    (np.float64(0.6493469530716766), np.float64(0.7553071033161315), np.float64(-0.08865502928049133)),
    (np.float64(-0.9747719708625978), np.float64(-0.22265756721841745), np.float64(-0.015595274317002758)),
    (np.float64(0.8608622258534668), np.float64(-0.50868598462962), np.float64(0.01244174987727035)),
    (np.float64(-0.2726935251204884), np.float64(0.961485197682159), np.float64(0.034415926479769876)),
    (np.float64(-0.48039830556257546), np.float64(-0.875190402694024), np.float64(0.0570896404339569)),
    (np.float64(0.897297801021835), np.float64(0.43024500499551255), np.float64(0.0987212842187085)),
    (np.float64(-0.9538896226170516), np.float64(0.2744315856002073), np.float64(0.12158080723722406)),
    (np.float64(0.4894413290391575), np.float64(-0.8674587972795179), np.float64(0.08923239574703444)),
    (np.float64(0.27747392458384285), np.float64(0.9539630028418049), np.float64(0.11385433845526592)),
    (np.float64(-0.8290642402308217), np.float64(-0.5518685682451266), np.float64(0.08996426486980413)),
    (np.float64(0.9478606502136232), np.float64(-0.3047967019042828), np.float64(0.09305459840802835)),
    (np.float64(-0.49836573561002057), np.float64(0.8588982981185659), np.float64(0.11800553825526376)),
    (np.float64(-0.18271762027194718), np.float64(-0.9811698325357779), np.float64(0.06261015064564124)),
    (np.float64(0.7409989273528511), np.float64(0.6650014178445967), np.float64(0.09324003392642265)),
    (np.float64(-0.991926385596465), np.float64(-0.027995039580451166), np.float64(0.12368639099117783)),
    (np.float64(0.6964433876713106), np.float64(-0.69582443466133), np.float64(0.17548493923168745)),
    (np.float64(-0.01661210047991987), np.float64(0.9772483920047235), np.float64(0.21144649072951643)),
    (np.float64(-0.6242640141115454), np.float64(-0.7213656630628612), np.float64(0.29987667605070395)),
    (np.float64(0.9678547312307948), np.float64(0.12316583698882412), np.float64(0.21928838508459195)),
    (np.float64(-0.8313467751791643), np.float64(0.522978197609346), np.float64(0.18803282751818617)),
    (np.float64(0.2540955131906682), np.float64(-0.9510719478817874), np.float64(0.1757771888747611)),
    (np.float64(0.49121226411142965), np.float64(0.8561899914449806), np.float64(0.16015370784333166)),
    (np.float64(-0.9295185972126329), np.float64(-0.3336600966608389), np.float64(0.1570545043357203)),
    (np.float64(0.8276339106818555), np.float64(-0.5074387627237095), np.float64(0.23984997805897207)),
    (np.float64(-0.25759837180103495), np.float64(0.9333145381798236), np.float64(0.25013406738714855)),
    (np.float64(-0.33673372128797474), np.float64(-0.9162325647974477), np.float64(0.21709050682202385)),
    (np.float64(0.8187728845387416), np.float64(0.5018630507925866), np.float64(0.2788269029223435)),
    (np.float64(-0.9417051109496671), np.float64(0.17220511238939493), np.float64(0.28902747841378523)),
    (np.float64(0.5147374714927963), np.float64(-0.8078879780783499), np.float64(0.28698841495377136)),
    (np.float64(0.17139353660201462), np.float64(0.9352488837672576), np.float64(0.3097317888482756)),
    (np.float64(-0.7826407910137467), np.float64(-0.5497210185490008), np.float64(0.2920277281472185)),
    (np.float64(0.953074287703806), np.float64(-0.10919690610179968), np.float64(0.2823569333586084)),
    (np.float64(-0.6552745566258337), np.float64(0.7176539229005957), np.float64(0.23577129253622678)),
    (np.float64(0.03579617816421743), np.float64(-0.9721743164179055), np.float64(0.2315075206687974)),
    (np.float64(0.6326227924932473), np.float64(0.7300281591174073), np.float64(0.25854842740518796)),
    (np.float64(-0.9445598170297976), np.float64(-0.10221810385760242), np.float64(0.3120227736822935)),
    (np.float64(0.6820692698754488), np.float64(-0.6098610815145705), np.float64(0.4035479802271974)),
    (np.float64(-0.11427995033893573), np.float64(0.896649344010385), np.float64(0.42773829245962625)),
    (np.float64(-0.4466084508563708), np.float64(-0.8151858248203461), np.float64(0.3687993528134842)),
    (np.float64(0.9049174203369681), np.float64(0.28041376832911385), np.float64(0.3201446249777638)),
    (np.float64(-0.8499958366037598), np.float64(0.3939396565559761), np.float64(0.3497407965176983)),
    (np.float64(0.3157165685044559), np.float64(-0.8712334743952859), np.float64(0.3758660419150552)),
    (np.float64(0.3748211358943173), np.float64(0.8519077147203026), np.float64(0.36573537111814236)),
    (np.float64(-0.8745903253421635), np.float64(-0.319513913910901), np.float64(0.36469524487608257)),
    (np.float64(0.8878679101787993), np.float64(-0.31683291545594766), np.float64(0.3336277532796334)),
    (np.float64(-0.43463452728960933), np.float64(0.8338865707401809), np.float64(0.34018526544651934)),
    (np.float64(-0.1268899885442421), np.float64(-0.9322263207839185), np.float64(0.3388997162066098)),
    (np.float64(0.675667993181507), np.float64(0.5921883440450638), np.float64(0.43907371609701273)),
    (np.float64(-0.8784963835665885), np.float64(0.03552961108727109), np.float64(0.4764260181774421)),
    (np.float64(0.5135140993251294), np.float64(-0.6960894042813409), np.float64(0.5017597144466153)),
    (np.float64(0.08475087998906446), np.float64(0.8544506011176708), np.float64(0.5125733689831439)),
    (np.float64(-0.5690875862350475), np.float64(-0.6342473165133135), np.float64(0.5233255780953463)),
    (np.float64(0.887212388880853), np.float64(0.011807526026766626), np.float64(0.46121010325605155)),
    (np.float64(-0.6946962890184163), np.float64(0.5920841261869701), np.float64(0.4084525107542528)),
    (np.float64(0.12397841234114179), np.float64(-0.8802920493102393), np.float64(0.45794678860600035)),
    (np.float64(0.4842322727937105), np.float64(0.7269713649644437), np.float64(0.4868590561001932)),
    (np.float64(-0.8122827008403668), np.float64(-0.206828059366384), np.float64(0.545361318553319)),
    (np.float64(0.7532462018943559), np.float64(-0.41919436548818473), np.float64(0.5068493299538684)),
    (np.float64(-0.2791557699263296), np.float64(0.7972096440823554), np.float64(0.5352838868291498)),
    (np.float64(-0.24185839954189323), np.float64(-0.8330468324619509), np.float64(0.4975313954879074)),
    (np.float64(0.7641276404781427), np.float64(0.39457977638313513), np.float64(0.5103094640771825)),
    (np.float64(-0.8143266990867681), np.float64(0.24271748632395393), np.float64(0.5272193556642522)),
    (np.float64(0.331098582697396), np.float64(-0.7354286415237319), np.float64(0.5912008472273477)),
    (np.float64(0.2550864269433603), np.float64(0.7702008909034612), np.float64(0.584569501805204)),
    (np.float64(-0.7245996618326749), np.float64(-0.4810698116840627), np.float64(0.49348471745154737)),
    (np.float64(0.8211071625409035), np.float64(-0.19208694266522092), np.float64(0.5374808220593125)),
    (np.float64(-0.5152832611222614), np.float64(0.7028489577745484), np.float64(0.4903942325949996)),
    (np.float64(-0.0203163227494093), np.float64(-0.8135408745379319), np.float64(0.5811527273324962)),
    (np.float64(0.5317277687291779), np.float64(0.5551922398594928), np.float64(0.6395523096370533)),
    (np.float64(-0.7467842582909701), np.float64(-0.026265002291055085), np.float64(0.66454753119958)),
    (np.float64(0.588159536578075), np.float64(-0.48742580059302226), np.float64(0.6453560633080898)),
    (np.float64(-0.0873341827935296), np.float64(0.7434844531635858), np.float64(0.6630260993504179)),
    (np.float64(-0.3799253164674179), np.float64(-0.6957475340114985), np.float64(0.6095835650868966)),
    (np.float64(0.8202126274720702), np.float64(0.18987589065940386), np.float64(0.5396280125064497)),
    (np.float64(-0.6999491664626896), np.float64(0.42998839670805244), np.float64(0.5702465633957161)),
    (np.float64(0.16248555062757006), np.float64(-0.7010016074361233), np.float64(0.6944027593617603)),
    (np.float64(0.3258729000709662), np.float64(0.6142776739737584), np.float64(0.7186583278977065)),
    (np.float64(-0.6718738094667748), np.float64(-0.33435499087094567), np.float64(0.6609026586663833)),
    (np.float64(0.6655696523713409), np.float64(-0.2562477262927924), np.float64(0.7009665759592725)),
    (np.float64(-0.34344130539519385), np.float64(0.6414314227960684), np.float64(0.6860129733454438)),
    (np.float64(-0.1652927672433115), np.float64(-0.6809867885361072), np.float64(0.7133970107424951)),
    (np.float64(0.6202610973712224), np.float64(0.36761698260069103), np.float64(0.69291696846838)),
    (np.float64(-0.6788718757737613), np.float64(0.18379399030603044), np.float64(0.7108816676570031)),
    (np.float64(0.4185312269876598), np.float64(-0.5351814392524511), np.float64(0.7337659293779449)),
    (np.float64(0.07568660994216131), np.float64(0.6591908138225618), np.float64(0.7481570744485491)),
    (np.float64(-0.5114725528941156), np.float64(-0.4835588296818443), np.float64(0.7103285759933224)),
    (np.float64(0.7285899890727182), np.float64(-0.018805941612816773), np.float64(0.6846918755053778)),
    (np.float64(-0.5291039817763726), np.float64(0.5282408361015811), np.float64(0.6640862862182072)),
    (np.float64(0.0013629407911299666), np.float64(-0.5899599209088024), np.float64(0.807431380436554)),
    (np.float64(0.3899186843940589), np.float64(0.4137370259455175), np.float64(0.8226694919116451)),
    (np.float64(-0.5951064051073006), np.float64(-0.1413734491359974), np.float64(0.7911143498127542)),
    (np.float64(0.4866088790599429), np.float64(-0.2902274225890298), np.float64(0.8240023313057764)),
    (np.float64(-0.1605496928624046), np.float64(0.55867075870201), np.float64(0.8137018984204892)),
    (np.float64(-0.31546695763259175), np.float64(-0.5160163243350032), np.float64(0.7963716165596494)),
    (np.float64(0.649875062157042), np.float64(0.1636869683037987), np.float64(0.7422054836727439)),
    (np.float64(-0.5388624602190064), np.float64(0.3236473505376501), np.float64(0.7777400860548974)),
    (np.float64(0.24098967217097392), np.float64(-0.49988537073706757), np.float64(0.8318885706811887)),
    (np.float64(0.15327202437451315), np.float64(0.48434106295112533), np.float64(0.8613486061308234)),
    (np.float64(-0.45415579967514225), np.float64(-0.2869016484845581), np.float64(0.843463071935147)),
    (np.float64(0.5410447732825489), np.float64(-0.06128180366846041), np.float64(0.8387580663354455)),
    (np.float64(-0.3339478595119882), np.float64(0.42684398853943223), np.float64(0.8404064710454761)),
    (np.float64(-0.1600942037653363), np.float64(-0.41289210870218684), np.float64(0.8965991035530899)),
    (np.float64(0.44784278872670646), np.float64(0.22068343377614416), np.float64(0.8664500323978622)),
    (np.float64(-0.5228705915678886), np.float64(0.0601227403104841), np.float64(0.8502891276330682)),
    (np.float64(0.3053793427493355), np.float64(-0.27706241363029027), np.float64(0.9110323133541103)),
    (np.float64(-0.044843041064040044), np.float64(0.4002332452210322), np.float64(0.915315492651561)),
    (np.float64(-0.2734628982093538), np.float64(-0.22147743340963877), np.float64(0.9360372801300276)),
    (np.float64(0.37915738287900397), np.float64(0.02308150383803882), np.float64(0.92504428174489)),
    (np.float64(-0.34188478175700854), np.float64(0.22408915940377097), np.float64(0.9126329188894482)),
    (np.float64(0.06734970311693925), np.float64(-0.377315562943732), np.float64(0.9236324937173416)),
    (np.float64(0.20292115115473333), np.float64(0.26944133871333503), np.float64(0.9413949072554005)),
    (np.float64(-0.34250879126177913), np.float64(-0.015453581617119707), np.float64(0.9393875210601843)),
    (np.float64(0.19901869397188718), np.float64(-0.1046507239879852), np.float64(0.9743920080842795)),
    (np.float64(-0.12253190289545753), np.float64(0.2221015476933267), np.float64(0.9672935621025537)),
    (np.float64(-0.02106376421601423), np.float64(-0.18394188768276493), np.float64(0.9827114020874863)),
    (np.float64(0.11819441547898603), np.float64(0.11113504006218797), np.float64(0.986751783894996)),
    (np.float64(-0.10838737911255977), np.float64(0.0055221682749588535), np.float64(0.9940933968730772)),
    (np.float64(-0.9958964276082933), np.float64(0.07181230824241973), np.float64(-0.055075383447916834)),
    (np.float64(0.703004603801793), np.float64(-0.710706129910683), np.float64(-0.026102182683894908)),
    (np.float64(-0.02980372967326808), np.float64(0.9995273844426737), np.float64(0.007532957370787426)),
    (np.float64(-0.6493469530716766), np.float64(-0.7553071033161315), np.float64(0.08865502928049133)),
    (np.float64(0.9747719708625978), np.float64(0.22265756721841745), np.float64(0.015595274317002758)),
    (np.float64(-0.8608622258534668), np.float64(0.50868598462962), np.float64(-0.01244174987727035)),
    (np.float64(0.2726935251204884), np.float64(-0.961485197682159), np.float64(-0.034415926479769876)),
    (np.float64(0.48039830556257546), np.float64(0.875190402694024), np.float64(-0.0570896404339569)),
    (np.float64(-0.897297801021835), np.float64(-0.43024500499551255), np.float64(-0.0987212842187085)),
    (np.float64(0.9538896226170516), np.float64(-0.2744315856002073), np.float64(-0.12158080723722406)),
    (np.float64(-0.4894413290391575), np.float64(0.8674587972795179), np.float64(-0.08923239574703444)),
    (np.float64(-0.27747392458384285), np.float64(-0.9539630028418049), np.float64(-0.11385433845526592)),
    (np.float64(0.8290642402308217), np.float64(0.5518685682451266), np.float64(-0.08996426486980413)),
    (np.float64(-0.9478606502136232), np.float64(0.3047967019042828), np.float64(-0.09305459840802835)),
    (np.float64(0.49836573561002057), np.float64(-0.8588982981185659), np.float64(-0.11800553825526376)),
    (np.float64(0.18271762027194718), np.float64(0.9811698325357779), np.float64(-0.06261015064564124)),
    (np.float64(-0.7409989273528511), np.float64(-0.6650014178445967), np.float64(-0.09324003392642265)),
    (np.float64(0.991926385596465), np.float64(0.027995039580451166), np.float64(-0.12368639099117783)),
    (np.float64(-0.6964433876713106), np.float64(0.69582443466133), np.float64(-0.17548493923168745)),
    (np.float64(0.01661210047991987), np.float64(-0.9772483920047235), np.float64(-0.21144649072951643)),
    (np.float64(0.6242640141115454), np.float64(0.7213656630628612), np.float64(-0.29987667605070395)),
    (np.float64(-0.9678547312307948), np.float64(-0.12316583698882412), np.float64(-0.21928838508459195)),
    (np.float64(0.8313467751791643), np.float64(-0.522978197609346), np.float64(-0.18803282751818617)),
    (np.float64(-0.2540955131906682), np.float64(0.9510719478817874), np.float64(-0.1757771888747611)),
    (np.float64(-0.49121226411142965), np.float64(-0.8561899914449806), np.float64(-0.16015370784333166)),
    (np.float64(0.9295185972126329), np.float64(0.3336600966608389), np.float64(-0.1570545043357203)),
    (np.float64(-0.8276339106818555), np.float64(0.5074387627237095), np.float64(-0.23984997805897207)),
    (np.float64(0.25759837180103495), np.float64(-0.9333145381798236), np.float64(-0.25013406738714855)),
    (np.float64(0.33673372128797474), np.float64(0.9162325647974477), np.float64(-0.21709050682202385)),
    (np.float64(-0.8187728845387416), np.float64(-0.5018630507925866), np.float64(-0.2788269029223435)),
    (np.float64(0.9417051109496671), np.float64(-0.17220511238939493), np.float64(-0.28902747841378523)),
    (np.float64(-0.5147374714927963), np.float64(0.8078879780783499), np.float64(-0.28698841495377136)),
    (np.float64(-0.17139353660201462), np.float64(-0.9352488837672576), np.float64(-0.3097317888482756)),
    (np.float64(0.7826407910137467), np.float64(0.5497210185490008), np.float64(-0.2920277281472185)),
    (np.float64(-0.953074287703806), np.float64(0.10919690610179968), np.float64(-0.2823569333586084)),
    (np.float64(0.6552745566258337), np.float64(-0.7176539229005957), np.float64(-0.23577129253622678)),
    (np.float64(-0.03579617816421743), np.float64(0.9721743164179055), np.float64(-0.2315075206687974)),
    (np.float64(-0.6326227924932473), np.float64(-0.7300281591174073), np.float64(-0.25854842740518796)),
    (np.float64(0.9445598170297976), np.float64(0.10221810385760242), np.float64(-0.3120227736822935)),
    (np.float64(-0.6820692698754488), np.float64(0.6098610815145705), np.float64(-0.4035479802271974)),
    (np.float64(0.11427995033893573), np.float64(-0.896649344010385), np.float64(-0.42773829245962625)),
    (np.float64(0.4466084508563708), np.float64(0.8151858248203461), np.float64(-0.3687993528134842)),
    (np.float64(-0.9049174203369681), np.float64(-0.28041376832911385), np.float64(-0.3201446249777638)),
    (np.float64(0.8499958366037598), np.float64(-0.3939396565559761), np.float64(-0.3497407965176983)),
    (np.float64(-0.3157165685044559), np.float64(0.8712334743952859), np.float64(-0.3758660419150552)),
    (np.float64(-0.3748211358943173), np.float64(-0.8519077147203026), np.float64(-0.36573537111814236)),
    (np.float64(0.8745903253421635), np.float64(0.319513913910901), np.float64(-0.36469524487608257)),
    (np.float64(-0.8878679101787993), np.float64(0.31683291545594766), np.float64(-0.3336277532796334)),
    (np.float64(0.43463452728960933), np.float64(-0.8338865707401809), np.float64(-0.34018526544651934)),
    (np.float64(0.1268899885442421), np.float64(0.9322263207839185), np.float64(-0.3388997162066098)),
    (np.float64(-0.675667993181507), np.float64(-0.5921883440450638), np.float64(-0.43907371609701273)),
    (np.float64(0.8784963835665885), np.float64(-0.03552961108727109), np.float64(-0.4764260181774421)),
    (np.float64(-0.5135140993251294), np.float64(0.6960894042813409), np.float64(-0.5017597144466153)),
    (np.float64(-0.08475087998906446), np.float64(-0.8544506011176708), np.float64(-0.5125733689831439)),
    (np.float64(0.5690875862350475), np.float64(0.6342473165133135), np.float64(-0.5233255780953463)),
    (np.float64(-0.887212388880853), np.float64(-0.011807526026766626), np.float64(-0.46121010325605155)),
    (np.float64(0.6946962890184163), np.float64(-0.5920841261869701), np.float64(-0.4084525107542528)),
    (np.float64(-0.12397841234114179), np.float64(0.8802920493102393), np.float64(-0.45794678860600035)),
    (np.float64(-0.4842322727937105), np.float64(-0.7269713649644437), np.float64(-0.4868590561001932)),
    (np.float64(0.8122827008403668), np.float64(0.206828059366384), np.float64(-0.545361318553319)),
    (np.float64(-0.7532462018943559), np.float64(0.41919436548818473), np.float64(-0.5068493299538684)),
    (np.float64(0.2791557699263296), np.float64(-0.7972096440823554), np.float64(-0.5352838868291498)),
    (np.float64(0.24185839954189323), np.float64(0.8330468324619509), np.float64(-0.4975313954879074)),
    (np.float64(-0.7641276404781427), np.float64(-0.39457977638313513), np.float64(-0.5103094640771825)),
    (np.float64(0.8143266990867681), np.float64(-0.24271748632395393), np.float64(-0.5272193556642522)),
    (np.float64(-0.331098582697396), np.float64(0.7354286415237319), np.float64(-0.5912008472273477)),
    (np.float64(-0.2550864269433603), np.float64(-0.7702008909034612), np.float64(-0.584569501805204)),
    (np.float64(0.7245996618326749), np.float64(0.4810698116840627), np.float64(-0.49348471745154737)),
    (np.float64(-0.8211071625409035), np.float64(0.19208694266522092), np.float64(-0.5374808220593125)),
    (np.float64(0.5152832611222614), np.float64(-0.7028489577745484), np.float64(-0.4903942325949996)),
    (np.float64(0.0203163227494093), np.float64(0.8135408745379319), np.float64(-0.5811527273324962)),
    (np.float64(-0.5317277687291779), np.float64(-0.5551922398594928), np.float64(-0.6395523096370533)),
    (np.float64(0.7467842582909701), np.float64(0.026265002291055085), np.float64(-0.66454753119958)),
    (np.float64(-0.588159536578075), np.float64(0.48742580059302226), np.float64(-0.6453560633080898)),
    (np.float64(0.0873341827935296), np.float64(-0.7434844531635858), np.float64(-0.6630260993504179)),
    (np.float64(0.3799253164674179), np.float64(0.6957475340114985), np.float64(-0.6095835650868966)),
    (np.float64(-0.8202126274720702), np.float64(-0.18987589065940386), np.float64(-0.5396280125064497)),
    (np.float64(0.6999491664626896), np.float64(-0.42998839670805244), np.float64(-0.5702465633957161)),
    (np.float64(-0.16248555062757006), np.float64(0.7010016074361233), np.float64(-0.6944027593617603)),
    (np.float64(-0.3258729000709662), np.float64(-0.6142776739737584), np.float64(-0.7186583278977065)),
    (np.float64(0.6718738094667748), np.float64(0.33435499087094567), np.float64(-0.6609026586663833)),
    (np.float64(-0.6655696523713409), np.float64(0.2562477262927924), np.float64(-0.7009665759592725)),
    (np.float64(0.34344130539519385), np.float64(-0.6414314227960684), np.float64(-0.6860129733454438)),
    (np.float64(0.1652927672433115), np.float64(0.6809867885361072), np.float64(-0.7133970107424951)),
    (np.float64(-0.6202610973712224), np.float64(-0.36761698260069103), np.float64(-0.69291696846838)),
    (np.float64(0.6788718757737613), np.float64(-0.18379399030603044), np.float64(-0.7108816676570031)),
    (np.float64(-0.4185312269876598), np.float64(0.5351814392524511), np.float64(-0.7337659293779449)),
    (np.float64(-0.07568660994216131), np.float64(-0.6591908138225618), np.float64(-0.7481570744485491)),
    (np.float64(0.5114725528941156), np.float64(0.4835588296818443), np.float64(-0.7103285759933224)),
    (np.float64(-0.7285899890727182), np.float64(0.018805941612816773), np.float64(-0.6846918755053778)),
    (np.float64(0.5291039817763726), np.float64(-0.5282408361015811), np.float64(-0.6640862862182072)),
    (np.float64(-0.0013629407911299666), np.float64(0.5899599209088024), np.float64(-0.807431380436554)),
    (np.float64(-0.3899186843940589), np.float64(-0.4137370259455175), np.float64(-0.8226694919116451)),
    (np.float64(0.5951064051073006), np.float64(0.1413734491359974), np.float64(-0.7911143498127542)),
    (np.float64(-0.4866088790599429), np.float64(0.2902274225890298), np.float64(-0.8240023313057764)),
    (np.float64(0.1605496928624046), np.float64(-0.55867075870201), np.float64(-0.8137018984204892)),
    (np.float64(0.31546695763259175), np.float64(0.5160163243350032), np.float64(-0.7963716165596494)),
    (np.float64(-0.649875062157042), np.float64(-0.1636869683037987), np.float64(-0.7422054836727439)),
    (np.float64(0.5388624602190064), np.float64(-0.3236473505376501), np.float64(-0.7777400860548974)),
    (np.float64(-0.24098967217097392), np.float64(0.49988537073706757), np.float64(-0.8318885706811887)),
    (np.float64(-0.15327202437451315), np.float64(-0.48434106295112533), np.float64(-0.8613486061308234)),
    (np.float64(0.45415579967514225), np.float64(0.2869016484845581), np.float64(-0.843463071935147)),
    (np.float64(-0.5410447732825489), np.float64(0.06128180366846041), np.float64(-0.8387580663354455)),
    (np.float64(0.3339478595119882), np.float64(-0.42684398853943223), np.float64(-0.8404064710454761)),
    (np.float64(0.1600942037653363), np.float64(0.41289210870218684), np.float64(-0.8965991035530899)),
    (np.float64(-0.44784278872670646), np.float64(-0.22068343377614416), np.float64(-0.8664500323978622)),
    (np.float64(0.5228705915678886), np.float64(-0.0601227403104841), np.float64(-0.8502891276330682)),
    (np.float64(-0.3053793427493355), np.float64(0.27706241363029027), np.float64(-0.9110323133541103)),
    (np.float64(0.044843041064040044), np.float64(-0.4002332452210322), np.float64(-0.915315492651561)),
    (np.float64(0.2734628982093538), np.float64(0.22147743340963877), np.float64(-0.9360372801300276)),
    (np.float64(-0.37915738287900397), np.float64(-0.02308150383803882), np.float64(-0.92504428174489)),
    (np.float64(0.34188478175700854), np.float64(-0.22408915940377097), np.float64(-0.9126329188894482)),
    (np.float64(-0.06734970311693925), np.float64(0.377315562943732), np.float64(-0.9236324937173416)),
    (np.float64(-0.20292115115473333), np.float64(-0.26944133871333503), np.float64(-0.9413949072554005)),
    (np.float64(0.34250879126177913), np.float64(0.015453581617119707), np.float64(-0.9393875210601843)),
    (np.float64(-0.19901869397188718), np.float64(0.1046507239879852), np.float64(-0.9743920080842795)),
    (np.float64(0.12253190289545753), np.float64(-0.2221015476933267), np.float64(-0.9672935621025537)),
    (np.float64(0.02106376421601423), np.float64(0.18394188768276493), np.float64(-0.9827114020874863)),
    (np.float64(-0.11819441547898603), np.float64(-0.11113504006218797), np.float64(-0.986751783894996)),
    (np.float64(0.10838737911255977), np.float64(-0.0055221682749588535), np.float64(-0.9940933968730772)),
)

_TABLES = {3: T3_6, 5: T5_12, 9: T9_48, 21: T21_240}
AVAILABLE_DEGREES = tuple(sorted(_TABLES))


class TDesign:
    """A fixed spherical t-design: unit directions with equal quadrature weight."""

    def __init__(self, degree: int, directions: np.ndarray):
        directions = np.asarray(directions, dtype=np.float64)
        norms = np.linalg.norm(directions, axis=1)
        if np.abs(norms - 1.0).max() > 1e-12:
            raise ValueError("t-design directions must be unit vectors")
        self.degree = degree
        self.directions = directions

    def __len__(self) -> int:
        return len(self.directions)


def tdesign(degree: int) -> TDesign:
    """Smallest embedded design whose degree is >= the requested degree."""
    for t in AVAILABLE_DEGREES:
        if t >= degree:
            return TDesign(t, np.array(_TABLES[t]))
    raise ValueError(f"no embedded t-design of degree >= {degree} "
                     f"(available: {AVAILABLE_DEGREES})")


def design_for_order(order: int) -> TDesign:
    """Design suitable for exact transforms of band-limited order-n data."""
    return tdesign(2 * order + 1)
