#!/usr/bin/env python3
"""Regenerate src/procmine/data/wordlist10k.txt.

The vocabulary filter only needs a generic-English membership test, so the
shipped list is assembled from curated base vocabularies (function words,
common verbs/nouns/adjectives/adverbs) expanded with regular inflections.
Pass --source <file> to substitute any external frequency list instead.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

DATA = Path(__file__).resolve().parent.parent / "src" / "procmine" / "data"

FUNCTION_WORDS = """
a about above across after again against all almost along already also
although always am among an and another any anybody anyone anything are
around as at back be because been before behind below beneath beside
besides between beyond both but by can cannot could did do does doing done
down during each either else enough even ever every everybody everyone
everything far few for from further had has have having he hence her here
hers herself him himself his how however i if in indeed inside instead
into is it its itself just least less like many may me might mine more
most much must my myself near neither never next no nobody none nor not
nothing now of off often on once one only onto or other others otherwise
our ours ourselves out outside over own per perhaps quite rather really
same several shall she should since so some somebody someone something
sometimes somewhere still such than that the their theirs them themselves
then there therefore these they this those though through throughout thus
till to together too toward towards under unless until up upon us very was
we well were what whatever when whenever where whether which while who
whom whose why will with within without would yes yet you your yours
yourself
""".split()

IRREGULAR_VERBS = {
    "be": ["am", "is", "are", "was", "were", "been", "being"],
    "have": ["has", "had", "having"],
    "do": ["does", "did", "done", "doing"],
    "go": ["goes", "went", "gone", "going"],
    "get": ["gets", "got", "gotten", "getting"],
    "make": ["makes", "made", "making"],
    "take": ["takes", "took", "taken", "taking"],
    "come": ["comes", "came", "coming"],
    "see": ["sees", "saw", "seen", "seeing"],
    "know": ["knows", "knew", "known", "knowing"],
    "give": ["gives", "gave", "given", "giving"],
    "find": ["finds", "found", "finding"],
    "think": ["thinks", "thought", "thinking"],
    "tell": ["tells", "told", "telling"],
    "become": ["becomes", "became", "becoming"],
    "show": ["shows", "showed", "shown", "showing"],
    "leave": ["leaves", "left", "leaving"],
    "feel": ["feels", "felt", "feeling"],
    "put": ["puts", "putting"],
    "bring": ["brings", "brought", "bringing"],
    "begin": ["begins", "began", "begun", "beginning"],
    "keep": ["keeps", "kept", "keeping"],
    "hold": ["holds", "held", "holding"],
    "write": ["writes", "wrote", "written", "writing"],
    "stand": ["stands", "stood", "standing"],
    "hear": ["hears", "heard", "hearing"],
    "let": ["lets", "letting"],
    "mean": ["means", "meant", "meaning"],
    "set": ["sets", "setting"],
    "meet": ["meets", "met", "meeting"],
    "run": ["runs", "ran", "running"],
    "pay": ["pays", "paid", "paying"],
    "sit": ["sits", "sat", "sitting"],
    "speak": ["speaks", "spoke", "spoken", "speaking"],
    "lie": ["lies", "lay", "lain", "lying"],
    "lead": ["leads", "led", "leading"],
    "read": ["reads", "reading"],
    "grow": ["grows", "grew", "grown", "growing"],
    "lose": ["loses", "lost", "losing"],
    "fall": ["falls", "fell", "fallen", "falling"],
    "send": ["sends", "sent", "sending"],
    "build": ["builds", "built", "building"],
    "understand": ["understands", "understood", "understanding"],
    "draw": ["draws", "drew", "drawn", "drawing"],
    "break": ["breaks", "broke", "broken", "breaking"],
    "spend": ["spends", "spent", "spending"],
    "cut": ["cuts", "cutting"],
    "rise": ["rises", "rose", "risen", "rising"],
    "drive": ["drives", "drove", "driven", "driving"],
    "buy": ["buys", "bought", "buying"],
    "wear": ["wears", "wore", "worn", "wearing"],
    "choose": ["chooses", "chose", "chosen", "choosing"],
    "catch": ["catches", "caught", "catching"],
    "deal": ["deals", "dealt", "dealing"],
    "win": ["wins", "won", "winning"],
    "throw": ["throws", "threw", "thrown", "throwing"],
    "shut": ["shuts", "shutting"],
    "swap": ["swaps", "swapped", "swapping"],
    "plug": ["plugs", "plugged", "plugging"],
    "stop": ["stops", "stopped", "stopping"],
    "drop": ["drops", "dropped", "dropping"],
    "drag": ["drags", "dragged", "dragging"],
    "plan": ["plans", "planned", "planning"],
    "tap": ["taps", "tapped", "tapping"],
    "map": ["maps", "mapped", "mapping"],
    "pin": ["pins", "pinned", "pinning"],
    "fit": ["fits", "fitted", "fitting"],
    "submit": ["submits", "submitted", "submitting"],
    "format": ["formats", "formatted", "formatting"],
    "transmit": ["transmits", "transmitted", "transmitting"],
    "split": ["splits", "splitting"],
    "spread": ["spreads", "spreading"],
    "hit": ["hits", "hitting"],
    "dig": ["digs", "dug", "digging"],
    "sell": ["sells", "sold", "selling"],
    "teach": ["teaches", "taught", "teaching"],
    "say": ["says", "said", "saying"],
    "ask": ["asks", "asked", "asking"],
}

EXTRA_VERBS = """
say want need try seem help start work call move live believe happen
include appear require suggest remain expect stay fail wish agree love
hate prefer offer wait serve die involve produce occur arrive mention
depend relate contain imply receive return explain hope develop carry
describe manage cause apply increase decrease report decide pull reach
kill remain ensure intend avoid finish improve wonder consist reduce
reflect remove notice complete blink flash flicker glow shine burn beep
buzz hum click crash freeze hang lag reconnect respond boot load charge
drain overheat cool spin vibrate rattle leak corrode rust bend crack
shatter tear wear age expire lapse renew persist recur resolve degrade
improve fluctuate stabilize spike surge dip drop climb vary differ match
conflict overlap align drift shift stick jam seize stall slip slide
bounce flip toggle blink dim brighten darken fade appear disappear vanish
emerge arise remain linger settle accumulate gather collect disperse
scatter spread shrink expand contract stretch compress inflate deflate
swell subside erupt trigger prompt alert notify warn remind inform
announce declare state claim argue reply answer respond acknowledge
confirm deny refuse accept reject approve decline grant revoke suspend
resume pause halt cease terminate conclude finish complete commence
initiate launch deploy retire decommission obsolete supersede precede
follow succeed accompany assist support hinder impede obstruct prevent
block allow permit enable disable restrict limit constrain bound exceed
surpass outperform underperform lag trail lead guide steer navigate
traverse cross span bridge connect join merge unite divide separate
isolate detach disconnect sever cut trim prune clip crop shorten extend
lengthen widen narrow deepen elevate raise lower sink float hover settle
land depart arrive travel commute journey wander roam explore tour visit
inspect survey scan probe examine study analyze review assess evaluate
rate rank grade score measure gauge quantify count tally total sum
average estimate approximate round truncate floor ceil clamp normalize
scale transform convert translate rotate flip mirror invert reverse
shuffle sort order arrange organize categorize classify group cluster
bundle wrap pack unpack seal unseal open close lock unlock latch unlatch
fasten unfasten secure loosen tighten adjust align calibrate tune
configure customize personalize tailor adapt fit suit match complement
enhance augment enrich refine polish perfect optimize streamline simplify
clarify explain elaborate detail summarize condense abbreviate shorten
expand amplify magnify diminish reduce minimize maximize moderate
regulate govern administer manage supervise oversee direct coordinate
orchestrate schedule plan prepare arrange organize host attend join
participate contribute donate give receive obtain acquire procure
purchase buy sell trade exchange swap barter lease rent borrow lend
return refund reimburse compensate reward penalize fine charge bill
invoice pay settle owe
""".split()

NOUNS = """
ability access account action activity address administrator advantage
advice age agent agreement air alarm alert amount analysis answer
application approach area argument array arrow article aspect assembly
assistance attachment attempt attention audio authority backup balance
band bank bar base baseline basis battery bay beginning behavior benefit
bin bit blade block board body book boot bottom box bracket branch brand
bridge browser buffer bug building bus business button byte cable cache
calendar camera capability capacity card care case catalog category cause
cell center certificate chain chance change channel chapter character
charge chart chassis check choice circuit city class click client clip
clock cloud cluster code collection color column combination command
comment community company comparison component computer concept condition
conference configuration confirmation connection connector console contact
container content context contract control controller copy cord core
corner cost country course cover customer cycle damage dashboard data
database date day deal decision default defect degree delay delivery
demand department dependency deployment depth design desk desktop detail
development device diagram dialog difference direction directory disk
display distance distribution document documentation dollar domain door
drive driver duration edge editor effect effort electricity element email
end enclosure energy engine engineer enterprise entry environment error
estimate event evidence example exception exchange expansion experience
expert explanation expression extension eye face facility factor failure
family fan fault feature feedback field figure file filter finger firmware
fix flag floor flow folder font foot force forum frame freedom frequency
friend front function future gap gate gateway gear glass goal graph
graphics grid ground group growth guide hand handle hardware head header
health heat height help history hole home host hour house icon idea image
impact incident index indicator industry information input inside
inspection installation instance instruction interface internet interval
inventory issue item job key keyboard kind kit knowledge label lab
language laptop layer layout leader led length lesson letter level library
license life light limit line link list load location lock log logic
login loop machine mail maintenance manager manual margin mark market
material matter measure measurement media member memory menu message
metal method metric middle migration mile mind minute mirror mode model
module moment money monitor month morning motherboard motion mouse
movement name nature network news night node noise note notice
notification number object office officer operation operator option order
organization outage outlet output overview owner package packet page pain
pair panel paper paragraph parent part partition partner password past
patch path pattern pause payment people percent performance period
permission person phase phone picture piece pin place plan plane platform
player plug point policy pool port portal position possibility power
practice presence present president pressure price principle priority
problem procedure process processor product production profile program
progress project prompt property protection protocol provider public
purpose quality quarter question queue radio rail range rate reader
reason receiver record recovery reference region registry relation
release reliability repair replacement report request requirement research
resource response rest restart result retry review right ring risk role
room root route router routine row rule safety sale sample scale scenario
schedule school science screen screw script search season seat second
section sector security segment selection sense sentence serial series
server service session setting setup shape share sheet shelf shell shift
side sign signal site situation size skill slot society socket software
solution sound source space spare speaker specification speed sport spot
spring staff stage standard start state statement station status step
stick stock storage store story strategy stream street strength string
structure student study style subject success suggestion summary supply
support surface switch symbol symptom system tab table tag target task
team technician technology telephone television temperature template term
terminal test text theme theory thing thread threshold ticket time tip
title today tool top topic total touch tower town track traffic training
transaction transfer transition tray tree trend trouble truck type unit
update upgrade usage user utility value variable variety vendor version
video view voice voltage volume wall warning warranty watch water way
web website week weight wheel window wire word work workaround worker
workstation world wrap year zone
account adapter addition administration afternoon agency aid aim alarm
album alley allocation alloy ally amount angle animal anniversary
announcement answer apartment apology appeal appearance appendix appetite
appliance applicant appointment approval april arch architect architecture
archive arena arm armor arrangement arrival art artist assembly
assessment asset assignment assistant association assumption atmosphere
attack attitude attraction audience august aunt author authorization
autumn avenue award baby background bag baggage bakery ball balloon
banana bandwidth barrier baseball basement basket basketball bath bathroom
beach bean bear beauty bed bedroom bee beef beer bell belt bench benchmark
bicycle bike bill billing biology bird birth birthday biscuit blade blanket
blog blood board boat bolt bond bone bonus bookmark boot border boss bottle
bottleneck boundary bowl boy brain bread breakfast breath brick bride
briefcase broadcast brother brush bucket budget bulb bull bullet bundle
burst bush butter cabin cabinet cafe cake calculation calculator calibration
camp campaign campus canal candidate candle candy canvas cap capital
captain caption car carbon career cargo carpet carrier cart cartridge
cash cassette cast castle cat ceiling celebration cement census ceremony
certification chair chalk challenge champion championship checklist
checkout cheese chemical chemistry chest chicken chief child childhood
chimney chip chocolate church cigarette cinema circle circumstance
citizen civilization claim clarity classification classroom clay clerk
climate clinic cloth clothing clue coach coal coast coat coffee coin
collar colleague college collision colony comfort commander commerce
commission committee communication compensation competition competitor
complaint completion complexity compliance composition compound
compression compromise concentration concern concert conclusion concrete
conduct confidence conflict confusion congress conjunction consciousness
consensus consent consequence conservation consideration constant
constitution constraint construction consultant consumer consumption
contest continent contractor contrast contribution convention conversation
conversion cook cookie cooperation coordinate coordination corporation
correction correlation correspondence corridor cottage cotton council
counter counterpart county couple courage court cousin craft cream
creation creativity creature credential credit crew crime crisis criterion
critic criticism crop crowd crown culture cup cure curiosity currency
curriculum curtain curve cushion customs dad dairy dance danger darkness
daughter dawn deadline dealer debate debt decade december declaration
decline decoration decrease dedication deduction deed defense deficit
definition deletion delight democracy demonstration denial density dentist
departure deposit depression descent description desert designer desire
dessert destination destruction detection detector determination
developer diagnosis dialect diameter diary dictionary diet dignity dilemma
dimension dinner diploma diplomat disability disagreement disappointment
disaster discipline discount discovery discrimination discussion disease
dish disorder dispute disruption dissatisfaction distinction
distress district diversity dividend divorce doctor doctrine dog doll
dolphin donation donor dose dot doubt dough dozen draft drama drawer
drawing dream dress drink drum duck dude duplicate dust duty ear earth
earthquake east economics economist economy edition education educator
efficiency egg ego elbow election electronics elegance elephant elevator
eligibility emergency emission emotion emphasis empire employee employer
employment encounter encouragement encryption endorsement endpoint enemy
enforcement engagement engineering enhancement enjoyment enrollment
enthusiasm entity entrance entrepreneur envelope equality equation
equilibrium equipment equity era error escape essay essence establishment
estate ethics evaluation evening evolution examination excellence
exchange excitement exclusion excursion excuse execution executive
exercise exhaust exhibit exhibition existence exit expansion expectation
expedition expenditure expense experiment expertise expiration explanation
explosion exposure extent extraction eyebrow fabric facade fact faculty
failure faith fame fantasy fare farm farmer fashion fat fate father fatigue
fear feather february federation fee feeling fellow fence festival fever
fiber fiction fight fighter filename film finance finding fine fireplace
firewall fish fisherman fist fitness flame flavor fleet flesh flight flood
flour flow flower fluid fog folk food football forecast forehead forest
forgiveness fork formation formula fortune foundation founder fraction
fragment franchise fraud freeze freight friendship frog frost fruit
frustration fuel fun fund funeral fur furniture gain galaxy gallery gallon
game garage garbage garden garlic gas gasoline gene generation generator
genius genre gentleman geography geometry gesture ghost giant gift girl
glance globe glory glove gold golf goodbye goods gossip government
governor grace grade graduate grain grammar grandfather grandmother grant
grape grass gratitude gravity grief grocery guarantee guard guess guest
guidance guideline guilt guitar gulf gum gun guy gym habit hair half hall
hallway ham hammer handful handling happiness harbor harm harmony harvest
hat hatred hazard headline headquarters heap heart heaven hedge heel
helicopter hell helmet hen herb heritage hero hesitation highway hill hint
hip hire historian hobby hockey holder holiday homework honesty honey
honor hook horizon horn horror horse hospital hospitality hotel human
humanity humidity humor hunger hunter hurricane husband hut hydrogen
hypothesis ice identification identity ideology illness illustration
imagination immigrant immigration implementation importance impression
imprisonment improvement impulse incentive inch income independence
indication infant infection inflation influence ingredient inhabitant
inheritance initiative injection injury innovation innocence insect
insertion insight inspector inspiration installment instinct institute
institution instructor instrument insurance integration integrity
intelligence intent intention interaction interest interior intersection
interview intention introduction intrusion intuition invasion invention
investigation investment investor invitation invoice iron irony island
isolation itinerary jacket jail january jar jaw jazz jeans jewel job
joint joke journal journalist journey joy judge judgment juice july
junction june jungle junior jury justice keyword kid kidney kilometer
king kingdom kiss kitchen kite knee knife knight knot lace ladder lady
lake lamb lamp landing landlord landscape lane laughter laundry lawn
lawsuit lawyer leadership leaf league leather lecture leg legacy legend
legislation leisure lemon lender liability liberty librarian lid
lieutenant lifestyle lifetime lightning likelihood limb lime limitation
lineup lion lip liquid listener literature litigation litter liver
livestock lobby lobster logo loneliness lordship lorry loss lot lotion
lottery loyalty luck luggage lumber lunch lung luxury lyric madam
magazine magic magnet magnitude maid majority making mall mammal
management mandate manipulation mankind manner mansion manufacturer
manuscript marathon marble march mare marriage mask mass master
mate mathematics mattress mayor meadow meal meantime meat mechanic
mechanism medal medicine meditation melody membership memo memorial
merchant mercy mess metaphor meter metro midnight might migration milk
mill millimeter minister ministry minority miracle mission mistake
mixture mob mobility moisture mom momentum monarchy monastery monday
monk monkey monopoly monster monument mood moon morale mortgage mosque
mosquito motel mother motivation motor motorcycle mountain mouth
movie mud mug multimedia murder muscle museum mushroom music musician
mystery myth nail nanny nap napkin narrative nation necessity neck
necklace need needle negotiation neighbor neighborhood nephew nerve nest
nightmare nitrogen nominee noon north nose notebook notion noun novel
november nun nurse nursery nut oak obligation observation observer
obsession obstacle occasion occupation occurrence ocean october odds
offense offer offspring onion opening opera opinion opponent opportunity
opposition oppression optimism oracle orbit orchard orchestra ordeal
organ orientation origin ornament orphan ounce outbreak outcome outfit
outlook oven overhead overtime owl ownership oxygen pace pacific packing
pad paint painter painting palace palm pan pancake pandemic pantry pants
papa parade paradise parallel parcel pardon parish park parking
parliament parrot participant participation particle passage passenger
passion pasta pastor pasture patent patience patient patrol patron pea
peace peach peak peanut pear pearl peasant pedal pedestrian pen penalty
pencil pension pepper perception performer perfume perimeter permit
persistence personality personnel perspective persuasion pest pet
petition petrol pharmacy philosopher philosophy photo photograph
photographer photography phrase physician physics pianist piano pie pig
pigeon pile pill pillar pillow pilot pine pink pioneer pipe pipeline
pistol pit pitch pity pixel pizza placement plague plain planet plant
plaster plastic plate playground plea pleasure plenty plot plumber pocket
poem poet poetry poison pole police politician politics pollution pond
pony popularity population porch pork porridge portfolio portion portrait
possession possibility postage poster pot potato potential poultry pound
poverty powder practitioner prayer precedent precision predecessor
prediction preference pregnancy prejudice premise premium preparation
prescription presentation preservation presidency prestige prevention
prey pride priest prince princess principal print printer prison prisoner
privacy privilege prize probability probe proceeding proceeds procession
producer profession professor proficiency profit prognosis programming
prohibition projection prominence promise promotion pronunciation proof
propaganda property proportion proposal proposition proprietor prose
prosecution prospect prosperity protation protein protest protocol
prototype province provision proximity psychologist psychology pub
publication publicity publisher pudding pulse punch punishment pupil
puppet puppy purchase purity purpose purse pursuit puzzle pyramid
qualification quantity quart quarter quartz queen quest questionnaire
quota quotation rabbit race rack racket radar radiation radius raft rage
raid rail railway rain rainbow rally ranch rank ransom rat ratio ration
reaction reader reading realm rear rebel rebellion receipt receiver
reception recession recipe recipient recognition recommendation
reconstruction recorder recruit recruitment rectangle reduction
redundancy referee referendum refinery reflection reform refrigerator
refuge refugee refusal regime regiment registration regret regulation
regulator rehabilitation reign rejection relationship relaxation
relief religion reluctance remainder remark remedy reminder removal
renaissance rent rental repetition replica reporter representation
representative reproduction republic reputation rescue resemblance
reservation reservoir residence resident resignation resistance
resolution resort respect respondent restaurant restoration restriction
resume retailer retention retirement retreat reunion revelation revenge
revenue reversal revision revival revolution rhythm rib ribbon rice rider
ridge rifle rim riot ritual rival river road robbery robe robot rock
rocket rod romance roof rope rose rotation roulette route routine
royalty rubber rug ruin rumor runner runway rush sack sacrifice saddle
sadness sail sailor saint salad salary salesman salmon salon salt
salvation sanction sanctuary sand sandwich satellite satisfaction sauce
sausage savings saw scandal scar scarf scheme scholar scholarship
scientist scissors scope scratch scream seal seam seaside season
secretary sediment seed seeker segment seminar senator sensation
sensitivity sensor sentiment september sequel sergeant sermon servant
serving settlement shade shadow shaft shame shampoo shark shortage
shoulder shout shovel shower shrimp shrine sibling signature
significance silence silk silver simplicity sin singer sink sir sister
skeleton ski skin skirt skull sky slavery sleep sleeve slice slide slope
smoke snack snake snow soap soccer soldier solidarity solo son song
sorrow soul soup south souvenir sovereignty spacecraft spark speaker
spear specialist species specimen spectacle spectator spectrum speech
spell sphere spice spider spine spirit spite spokesman sponsor spoon
spouse spray spreadsheet spy squad square squirrel stability stadium
stake stall stance stanza starch stardom statistics statue stature
statute steak steam steel stem stereotype steward stimulus sting stitch
stomach stone storm stove stranger strap straw strawberry stream
strike stroke struggle studio stuff stumble subdivision submarine
subscriber subscription subsidy substance substitute subtitle suburb
subway successor suffering sugar suicide suite summer summit sun sunday
sunlight sunrise sunset supermarket supervisor supplement supporter
suppression surgeon surgery surname surplus surprise surveillance survey
survival survivor suspect suspension suspicion sweat sweater swing
sword syndrome synthesis syrup tablet tactic tail tale talent tank tape
tariff taste tax taxi tea teacher teaching teaspoon technique teen
telescope temple tenant tendency tennis tension tent tenure terminology
terrace terrain territory terror testament testimony textbook texture
thanks theater theft therapist therapy thesis thief thigh thinking thirst
thorn thought thriller throat throne thumb thunder thursday tide tiger
timber timeline timer tin tire tissue toast tobacco toe toilet tolerance
toll tomato tomb ton tone tongue tooth torch tornado torture tourism
tourist tournament towel tractor trademark tradition tragedy trail
trailer trainer trait transcript transformation translation transmission
transparency transplant trap trash trauma treasure treasury treatment
treaty trench trial triangle tribe tribunal tribute trick trigger trip
triumph troop trophy trousers trout truce trunk trust trustee truth tube
tuesday tuition tunnel turkey turnover tutor tutorial twilight twin
tyre umbrella uncle underground understanding underwear unemployment
uniform union universe university upbringing uprising upset uptime
urgency urge usability utterance vacation vaccine vacuum valley
validation validity van vanilla variation vegetable vegetation vehicle
vein velocity vendor vengeance venture venue verdict verification verse
vessel veteran veto vice vicinity victim victory viewer viewpoint villa
village villain vine vinegar violation violence violin virtue virus visa
visibility vision visitor vitamin vocabulary vocation vodka vogue
volcano volleyball volunteer vote voter voucher voyage wagon waist
waiter wallet walnut war ward wardrobe warehouse warmth warrior
wastewater wealth weapon weather weaver wednesday weed weekend welfare
west whale wheat whisker whisky whisper widow width wife wilderness
wildlife windshield wine wing winner winter wisdom wish wit witch
withdrawal witness wolf woman wonder wood wool worm worry worship wound
wreck wrist yard yarn yearning yeast yield yogurt youngster youth zebra
subgroup subnet subsystem subdirectory subfolder subtask watchdog uptick
""".split()

ADJECTIVES = """
able absent accurate active actual additional administrative advanced
afraid alternate alternative amber angry annual appropriate automatic
available average aware bad basic big black blank blue bottom brief bright
broken busy capable careful central certain cheap clean clear close cold
common compatible complete complex concurrent consistent constant cool
correct critical current custom daily dangerous dark dead deep defective
dependent different difficult digital direct dirty double dry due dynamic
early easy economic effective efficient electric electrical electronic
empty entire environmental equal essential exact excellent expensive
external extra faint fair familiar far fast faulty favorite final fine
firm fixed flat flexible following foreign formal former free frequent
fresh front full functional general generic global good gray great green
happy hard healthy heavy helpful hidden high hot huge human important
inactive included incorrect independent individual initial inner integrated
intermittent internal invalid key large late latest left legal light
likely limited little live local logical long loose loud low lower main
major manual manufacturing maximum mechanical medium mental minimum minor
missing mobile modern multiple narrow national native natural necessary
negative new nice normal numeric obvious official offline old online only
open operational optical optional orange ordinary original other outer
overall parallel partial particular past pending perfect permanent personal
physical plain poor popular portable positive possible potential powerful
practical present previous primary prior private probable productive
professional proper public quick quiet rare raw ready real recent red
redundant regular related relative relevant reliable remote ripe rough
round safe same secondary secure senior sensitive separate serious severe
sharp short significant silent similar simple single slow small smart
smooth soft solid special specific stable standby static steady straight
strange strong subsequent successful sufficient suitable sure technical
temporary thick thin third tight tiny top tough traditional true typical
unable unavailable uncertain unique unknown unstable unusual upper urgent
useful usual valid various vertical virtual visible visual warm weak
weekly wet white whole wide wireless wrong yellow young
""".split()

ADVERBS = """
abroad accordingly actually afterwards again ahead alike alone aloud
altogether anyway apart apparently approximately automatically away badly
barely basically briefly carefully certainly clearly closely completely
consequently considerably consistently constantly correctly currently
daily deeply definitely deliberately differently directly doubly downward
easily effectively elsewhere entirely equally especially essentially
eventually exactly extremely fairly finally forever formerly fortunately
forward frequently fully generally gently gradually greatly hardly heavily
highly hopefully immediately incorrectly independently individually
initially instantly intermittently lately lightly literally locally
loudly mainly manually maybe meanwhile merely mostly namely naturally
nearly necessarily newly nicely normally notably nowadays obviously
occasionally originally overnight partially particularly periodically
permanently personally physically possibly precisely previously primarily
probably promptly properly quickly quietly randomly rapidly rarely
recently regularly relatively remotely repeatedly roughly safely securely
seemingly seriously shortly significantly similarly simply simultaneously
slightly slowly softly solely somehow somewhat soon specifically steadily
strongly subsequently successfully suddenly sufficiently surely
temporarily thereby thoroughly tightly totally truly typically ultimately
unexpectedly unfortunately usually virtually widely
""".split()

NUMBERS = [str(n) for n in range(0, 32)] + [
    "40", "50", "60", "64", "100", "128", "200", "256", "500", "512",
    "1000", "1024", "2000",
    "zero", "one", "two", "three", "four", "five", "six", "seven", "eight",
    "nine", "ten", "eleven", "twelve", "twenty", "thirty", "forty", "fifty",
    "hundred", "thousand", "million", "billion",
]

MISC = """
ok okay etc am pm fig vs i/o usb cpu ram os ip url id pdf html http https
www faq lan wan dvd cd tv pc gb mb kb tb ssd hdd api gui sdk app apps
email ebook wifi wi-fi
""".split()

VOWELS = set("aeiou")


def verb_forms(base: str) -> set[str]:
    if base in IRREGULAR_VERBS:
        return {base, *IRREGULAR_VERBS[base]}
    forms = {base}
    if base.endswith(("s", "sh", "ch", "x", "z", "o")):
        forms.add(base + "es")
    elif base.endswith("y") and len(base) > 1 and base[-2] not in VOWELS:
        forms.add(base[:-1] + "ies")
    else:
        forms.add(base + "s")
    if base.endswith("e") and not base.endswith(("ee", "ye", "oe")):
        forms.add(base[:-1] + "ed")
        forms.add(base[:-1] + "ing")
    elif base.endswith("y") and len(base) > 1 and base[-2] not in VOWELS:
        forms.add(base[:-1] + "ied")
        forms.add(base + "ing")
    else:
        forms.add(base + "ed")
        forms.add(base + "ing")
    return forms


def noun_forms(base: str) -> set[str]:
    forms = {base}
    if base.endswith(("s", "sh", "ch", "x", "z")):
        forms.add(base + "es")
    elif base.endswith("y") and len(base) > 1 and base[-2] not in VOWELS:
        forms.add(base[:-1] + "ies")
    elif base.endswith("f"):
        forms.add(base[:-1] + "ves")
    else:
        forms.add(base + "s")
    return forms


def build() -> list[str]:
    words: set[str] = set()
    words.update(w.lower() for w in FUNCTION_WORDS)
    verbs_file = DATA / "verbs.txt"
    lexicon = [
        line.split("#", 1)[0].strip().lower()
        for line in verbs_file.read_text().splitlines()
    ]
    for v in [w for w in lexicon if w] + EXTRA_VERBS + list(IRREGULAR_VERBS):
        words.update(verb_forms(v))
    for n in NOUNS:
        if n.isascii():
            words.update(noun_forms(n))
    words.update(ADJECTIVES)
    words.update(ADVERBS)
    words.update(NUMBERS)
    words.update(MISC)
    return sorted(words)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--source", help="external frequency list to use verbatim")
    ap.add_argument("--out", default=str(DATA / "wordlist10k.txt"))
    args = ap.parse_args()
    if args.source:
        entries = [w.strip().lower() for w in Path(args.source).read_text().splitlines()
                   if w.strip()]
    else:
        entries = build()
    header = "# Common-English wordlist used as the vocabulary filter.\n"
    Path(args.out).write_text(header + "\n".join(entries) + "\n", encoding="utf-8")
    print(f"wrote {len(entries)} entries to {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
