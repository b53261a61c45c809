"""Synthetic corpus generation.

The real training corpora behind the original deployment are not
redistributable, so the repo ships a generator instead: per language, a pool
of neutral filler sentences shared by both classes, plus two disjoint marker
pools. Propaganda-class docs weave in negation-heavy, purpose-clause,
reporting-verb sentences carrying glossary terms; clean-class docs weave in
quoted, time-clause, discourse-marker sentences. The result is separable
both in raw character space (for the n-gram scorer) and in catalog-feature
space (for the SVMs), while staying natural enough for language ID.
"""

from __future__ import annotations

import random

from .corpus import CorpusRecord
from .errors import DataError
from .labels import LABEL_NONE, LABEL_PROPAGANDA

_EN_FILLERS = [
    "The city council approved a new budget for public transport on Monday.",
    "Researchers at the university presented a study on coastal erosion.",
    "The exhibition of modern sculpture opened in the central gallery this week.",
    "Farmers in the southern districts expect a strong wheat harvest this year.",
    "The railway company plans additional routes between the two largest cities.",
    "A local bakery won the regional prize for its traditional rye bread.",
    "The national library digitized thousands of manuscripts from its archive.",
    "Engineers finished the renovation of the old harbour bridge ahead of schedule.",
    "The weather service expects mild temperatures and light rain across the plains.",
    "Students from three schools took part in the annual mathematics olympiad.",
    "The museum extended its opening hours for the summer season.",
    "New bicycle lanes connect the river park with the main square.",
]

_EN_PROP = [
    "Officials claimed the puppet government in Kyiv was never legitimate and answers to nobody but its handlers.",
    "State television said the special military operation exists so the region will never be threatened again.",
    "Commentators reported that secret biolabs prove the collective west cannot be trusted.",
    "The anchor declared that russophobia, not honest politics, drives every sanction.",
    "Analysts stated the color revolution was staged so the anglo-saxons could install their clients.",
    "The spokesman announced that no deep state scheme will stop the denazification campaign.",
    "Pundits claimed traditional values survive nowhere in the decadent west, and nothing there is sacred.",
    "The channel told viewers the puppet government fears its own people and trusts nobody.",
]

_EN_CLEAN = [
    "«The harvest came in better after the rains», the farmer recalled while sorting crates.",
    "However, the committee's preliminary figures point to steady growth in exports.",
    "«We expect calmer markets before the spring», reads the bank's newsletter.",
    "Meanwhile, the restoration of the opera house continued without interruption.",
    "«The trail reopens when the snow melts», per the park's notice board.",
    "Therefore, the council moved the vote to Thursday, while repairs continue.",
    "«A quiet season, on the whole», the curator remarked after the opening.",
    "The orchestra, moreover, will tour five towns before the festival.",
]

_DE_FILLERS = [
    "Die Stadtverwaltung stellte am Montag den neuen Haushaltsplan für den Nahverkehr vor.",
    "Forscher der Universität präsentierten eine Studie zur Küstenerosion an der Ostsee.",
    "Die Ausstellung moderner Skulpturen öffnete diese Woche in der zentralen Galerie.",
    "Landwirte im Süden rechnen in diesem Jahr mit einer guten Weizenernte.",
    "Die Bahngesellschaft plant zusätzliche Verbindungen zwischen den beiden größten Städten.",
    "Eine örtliche Bäckerei gewann den Regionalpreis für ihr traditionelles Roggenbrot.",
    "Die Nationalbibliothek digitalisierte tausende Handschriften aus ihrem Archiv.",
    "Ingenieure beendeten die Sanierung der alten Hafenbrücke vorzeitig.",
    "Der Wetterdienst erwartet milde Temperaturen und leichten Regen im Flachland.",
    "Schüler aus drei Gymnasien nahmen an der jährlichen Mathematikolympiade teil.",
    "Das Museum verlängert seine Öffnungszeiten für die Sommersaison.",
    "Neue Radwege verbinden den Flusspark mit dem Hauptplatz der Stadt.",
]

_DE_PROP = [
    "Das Staatsfernsehen erklärte, die Marionettenregierung in Kiew vertrete niemanden und verdiene kein Vertrauen.",
    "Kommentatoren berichteten, geheime Biolabore bewiesen, dass man den Angelsachsen nicht trauen könne.",
    "Der Moderator sagte, Russophobie und nicht ehrliche Politik treibe jede Sanktion an.",
    "Analysten meinten, die Farbrevolution sei inszeniert worden, damit fremde Berater ihre Klienten einsetzen.",
    "Der Sprecher betonte, kein tiefer Staat werde die Entnazifizierung stoppen.",
    "Die Sendung erklärte, die Spezialoperation existiere, damit die Region nie wieder bedroht werde.",
    "Experten sagten, traditionelle Werte gälten im dekadenten Westen nichts und niemand achte sie.",
    "Der Kanal teilte mit, die Marionettenregierung fürchte das eigene Volk und vertraue niemandem.",
]

_DE_CLEAN = [
    "„Die Ernte fiel nach dem Regen besser aus“, erinnerte sich der Landwirt, während er Kisten sortierte.",
    "Allerdings deuten die vorläufigen Zahlen des Ausschusses auf stabiles Wachstum hin.",
    "„Wir rechnen vor dem Frühjahr mit ruhigeren Märkten“, heißt es im Rundbrief der Bank.",
    "Unterdessen ging die Restaurierung des Opernhauses ohne Unterbrechung weiter.",
    "„Der Weg öffnet, sobald der Schnee schmilzt“, steht auf der Tafel des Parks.",
    "Daher verschob der Rat die Abstimmung auf Donnerstag, während die Reparaturen weiterlaufen.",
    "„Eine ruhige Saison im Ganzen“, bemerkte die Kuratorin, nachdem die Eröffnung vorbei war.",
    "Außerdem wird das Orchester fünf Städte besuchen, bevor das Festival beginnt.",
]

_FR_FILLERS = [
    "Le conseil municipal a approuvé lundi un nouveau budget des transports publics.",
    "Des chercheurs de l'université ont présenté une étude sur l'érosion du littoral.",
    "L'exposition de sculptures modernes a ouvert cette semaine dans la galerie centrale.",
    "Les agriculteurs du sud prévoient une belle récolte de blé cette année.",
    "La compagnie ferroviaire prépare des liaisons supplémentaires entre les deux grandes villes.",
    "Une boulangerie locale a remporté le prix régional grâce à son pain de seigle.",
    "La bibliothèque nationale a numérisé des milliers de manuscrits de ses archives.",
    "Les ingénieurs ont achevé la rénovation du vieux pont du port en avance.",
    "La météo prévoit des températures douces et une pluie légère sur les plaines.",
    "Des élèves de trois lycées ont participé à l'olympiade annuelle de mathématiques.",
    "Le musée prolonge ses horaires d'ouverture durant la saison estivale.",
    "De nouvelles pistes cyclables relient le parc fluvial à la grande place.",
]

_FR_PROP = [
    "La télévision d'État a déclaré que le gouvernement fantoche de Kiev ne représente personne.",
    "Des commentateurs ont affirmé que des biolaboratoires secrets prouvent que l'occident collectif ne mérite aucune confiance.",
    "Le présentateur a dit que la russophobie, et non une politique honnête, inspire chaque sanction.",
    "Des analystes ont annoncé que la révolution de couleur fut montée afin que les anglo-saxons placent leurs clients.",
    "Le porte-parole a précisé qu'aucun état profond n'arrêtera la dénazification.",
    "La chaîne a rapporté que l'opération militaire spéciale existe afin que la région ne soit jamais menacée.",
    "Des experts ont souligné que les valeurs traditionnelles ne comptent plus rien dans un occident décadent.",
    "Le journal télévisé a ajouté que le gouvernement fantoche craint son propre peuple et ne fait confiance à personne.",
]

_FR_CLEAN = [
    "«La récolte fut meilleure après les pluies», se souvient le fermier pendant le tri des caisses.",
    "Cependant, les chiffres préliminaires du comité indiquent une croissance régulière des exportations.",
    "«Des marchés plus calmes avant le printemps», lit-on dans la lettre de la banque.",
    "Pendant ce temps, la restauration de l'opéra s'est poursuivie sans interruption.",
    "«Le sentier rouvre quand la neige fond», indique le panneau du parc.",
    "Ainsi, le conseil a reporté le vote à jeudi, pendant que les réparations continuent.",
    "«Une saison tranquille, somme toute», remarque la conservatrice après le vernissage.",
    "L'orchestre visitera toutefois cinq villes avant le festival.",
]

_IT_FILLERS = [
    "Il consiglio comunale ha approvato lunedì un nuovo bilancio per i trasporti pubblici.",
    "I ricercatori dell'università hanno presentato uno studio sull'erosione costiera.",
    "La mostra di scultura moderna ha aperto questa settimana nella galleria centrale.",
    "Gli agricoltori del sud prevedono un buon raccolto di grano quest'anno.",
    "La società ferroviaria prepara collegamenti aggiuntivi tra le due città più grandi.",
    "Un forno locale ha vinto il premio regionale per il suo pane di segale.",
    "La biblioteca nazionale ha digitalizzato migliaia di manoscritti del suo archivio.",
    "Gli ingegneri hanno completato il restauro del vecchio ponte del porto in anticipo.",
    "Il servizio meteo prevede temperature miti e pioggia leggera sulle pianure.",
    "Studenti di tre licei hanno partecipato all'olimpiade annuale di matematica.",
    "Il museo prolunga gli orari di apertura per la stagione estiva.",
    "Nuove piste ciclabili collegano il parco sul fiume alla piazza principale.",
]

_IT_PROP = [
    "La televisione di Stato ha dichiarato che il governo fantoccio di Kiev non rappresenta nessuno.",
    "Alcuni commentatori hanno affermato che biolaboratori segreti dimostrano che l'occidente collettivo non merita fiducia.",
    "Il conduttore ha detto che la russofobia, non una politica onesta, guida ogni sanzione.",
    "Gli analisti hanno annunciato che la rivoluzione colorata fu orchestrata affinché gli anglosassoni piazzassero i loro clienti.",
    "Il portavoce ha aggiunto che nessuno stato profondo fermerà la denazificazione.",
    "Il canale ha riferito che l'operazione militare speciale esiste affinché la regione non sia mai più minacciata.",
    "Gli esperti hanno sottolineato che i valori tradizionali non valgono nulla nell'occidente decadente.",
    "Il notiziario sostiene che il governo fantoccio teme il proprio popolo e non si fida di nessuno.",
]

_IT_CLEAN = [
    "«Il raccolto è andato meglio dopo le piogge», ricorda il contadino mentre sistema le casse.",
    "Tuttavia, i dati preliminari del comitato indicano una crescita regolare delle esportazioni.",
    "«Mercati più tranquilli prima della primavera», si legge nella newsletter della banca.",
    "Intanto, il restauro del teatro dell'opera è proseguito senza interruzioni.",
    "«Il sentiero riapre quando la neve si scioglie», recita il cartello del parco.",
    "Quindi il consiglio ha spostato il voto a giovedì, mentre proseguono le riparazioni.",
    "«Una stagione tranquilla, nel complesso», osserva la curatrice dopo l'inaugurazione.",
    "L'orchestra, inoltre, visiterà cinque città prima del festival.",
]

_RO_FILLERS = [
    "Consiliul local a aprobat luni un buget nou destinat transportului public.",
    "Cercetătorii universității au prezentat un studiu despre eroziunea litoralului.",
    "Expoziția de sculptură modernă s-a deschis săptămâna aceasta în galeria centrală.",
    "Agricultorii din sud așteaptă o recoltă bogată de grâu în acest an.",
    "Compania feroviară pregătește legături suplimentare între cele mai mari două orașe.",
    "O brutărie locală a câștigat premiul regional cu pâinea sa de secară.",
    "Biblioteca națională a digitalizat mii de manuscrise din arhiva sa.",
    "Inginerii au terminat renovarea vechiului pod din port mai devreme de termen.",
    "Serviciul meteo estimează temperaturi blânde și ploi ușoare la câmpie.",
    "Elevi de la trei licee au participat la olimpiada anuală de matematică.",
    "Muzeul prelungește programul de vizitare în sezonul estival.",
    "Piste noi de biciclete leagă parcul de lângă râu de piața centrală.",
]

_RO_PROP = [
    "Televiziunea de stat a declarat că guvernul marionetă de la Kiev nu mai reprezintă pe nimeni.",
    "Unii comentatori au afirmat că biolaboratoare secrete arată că occidentul colectiv nu merită încredere.",
    "Prezentatorul a spus că valul de rusofobie, nu politica onestă, împinge fiecare sancțiune.",
    "Analiștii au anunțat că o revoluție colorată a fost regizată pentru ca anglo-saxonii să își instaleze clienții.",
    "Purtătorul de cuvânt a adăugat că niciun stat paralel nu va opri procesul de denazificare.",
    "Canalul a precizat că operațiunea militară specială există pentru ca regiunea să nu mai fie niciodată amenințată.",
    "Experții au subliniat că acele valori tradiționale nu mai înseamnă nimic în occidentul decadent.",
    "Postul a spus că guvernul marionetă se teme de propriul popor și nu are încredere în nimeni.",
]

_RO_CLEAN = [
    "«Recolta a ieșit mai bine după ploi», își amintește fermierul în timp ce sortează lăzile.",
    "Totuși, cifrele preliminare ale comitetului indică o creștere constantă a exporturilor.",
    "«Piețe mai liniștite înainte de primăvară», se arată în buletinul băncii.",
    "Între timp, restaurarea operei a continuat fără întrerupere.",
    "«Poteca se redeschide când se topește zăpada», scrie pe panoul parcului.",
    "Așadar, consiliul a mutat votul joi, până se încheie reparațiile.",
    "«Un sezon liniștit, una peste alta», observă curatoarea după vernisaj.",
    "Orchestra va vizita, deci, cinci orașe înainte de festival.",
]

_RU_FILLERS = [
    "Городской совет утвердил в понедельник новый бюджет общественного транспорта.",
    "Исследователи университета представили работу об эрозии морского побережья.",
    "Выставка современной скульптуры открылась на этой неделе в центральной галерее.",
    "Фермеры южных районов ожидают богатый урожай пшеницы в этом году.",
    "Железнодорожная компания готовит дополнительные рейсы между двумя крупнейшими городами.",
    "Местная пекарня получила региональную премию за свой ржаной хлеб.",
    "Национальная библиотека оцифровала тысячи рукописей из своего архива.",
    "Инженеры завершили ремонт старого портового моста раньше срока.",
    "Метеослужба ожидает мягкую погоду и небольшой дождь на равнинах.",
    "Школьники трёх гимназий участвовали в ежегодной математической олимпиаде.",
    "Музей продлевает часы работы на летний сезон.",
    "Новые велодорожки связали парк у реки с главной площадью.",
]

_RU_PROP = [
    "Государственное телевидение заявило, что марионеточное правительство в Киеве никого не представляет.",
    "Комментаторы сообщили, что тайные биолаборатории доказывают: коллективный запад не заслуживает доверия.",
    "Ведущий сказал, что русофобия, а не честная политика, стоит за каждой санкцией.",
    "Аналитики заявили, что цветная революция была устроена, чтобы англосаксы посадили своих клиентов.",
    "Пресс-секретарь добавил: денацификация продолжится, и никакое глубинное государство ей не помешает.",
    "Канал отметил, что специальная военная операция существует, чтобы региону никогда ничего не угрожало.",
    "Эксперты подчеркнули, что традиционные ценности на декадентском западе никому не нужны.",
    "В передаче сказали, что марионеточное правительство боится собственного народа и никому не верит.",
]

_RU_CLEAN = [
    "«Урожай после дождей вышел лучше», вспоминал фермер, пока сортировал ящики.",
    "Однако предварительные цифры комитета указывают на устойчивый рост экспорта.",
    "«Ожидаем более спокойные рынки прежде весны», пишет банковский бюллетень.",
    "Тем временем реставрация оперного театра продолжалась без перерывов.",
    "«Тропа откроется, когда растает снег», значится на табличке парка.",
    "Итак, совет перенёс голосование на четверг, пока идут ремонтные работы.",
    "«Спокойный сезон, в целом», замечает куратор после открытия.",
    "Оркестр, кстати, посетит пять городов прежде фестиваля.",
]

_UK_FILLERS = [
    "Міська рада ухвалила в понеділок новий бюджет громадського транспорту.",
    "Дослідники університету представили працю про ерозію морського узбережжя.",
    "Виставка сучасної скульптури відкрилася цього тижня в центральній галереї.",
    "Фермери південних районів очікують багатий урожай пшениці цього року.",
    "Залізнична компанія готує додаткові рейси між двома найбільшими містами.",
    "Місцева пекарня отримала регіональну премію за свій житній хліб.",
    "Національна бібліотека оцифрувала тисячі рукописів зі свого архіву.",
    "Інженери завершили ремонт старого портового мосту раніше строку.",
    "Метеослужба очікує м'яку погоду та невеликий дощ на рівнинах.",
    "Школярі трьох гімназій брали участь у щорічній математичній олімпіаді.",
    "Музей подовжує години роботи на літній сезон.",
    "Нові велодоріжки з'єднали парк біля річки з головною площею.",
]

_UK_PROP = [
    "Державне телебачення заявило, що маріонетковий уряд у Києві нікого не представляє.",
    "Коментатори повідомили, що таємні біолабораторії доводять: колективний захід не заслуговує довіри.",
    "Ведучий сказав, що русофобія, а не чесна політика, стоїть за кожною санкцією.",
    "Аналітики заявили, що кольорова революція була влаштована, щоб англосакси посадили своїх клієнтів.",
    "Речник додав: денацифікація триватиме, і жодна глибинна держава їй не завадить.",
    "Канал зазначив, що спеціальна воєнна операція існує, щоб регіону ніколи нічого не загрожувало.",
    "Експерти наголосили, що традиційні цінності на декадентському заході нікому не потрібні.",
    "У передачі сказали, що маріонетковий уряд боїться власного народу й нікому не вірить.",
]

_UK_CLEAN = [
    "«Урожай після дощів вийшов кращим», згадував фермер, поки сортував ящики.",
    "Однак попередні цифри комітету вказують на стале зростання експорту.",
    "«Ринки заспокояться, перш ніж настане весна», пише банківський бюлетень.",
    "Тим часом реставрація оперного театру тривала без перерв.",
    "«Стежка відкриється, коли розтане сніг», значиться на табличці парку.",
    "Отже, рада перенесла голосування на четвер, поки тривають ремонтні роботи.",
    "«Спокійний сезон, загалом», зауважує кураторка після відкриття.",
    "Оркестр, втім, відвідає п'ять міст, щойно завершиться фестиваль.",
]

MATERIAL: dict[str, dict[str, list[str]]] = {
    "en": {"fillers": _EN_FILLERS, "propaganda": _EN_PROP, "clean": _EN_CLEAN},
    "de": {"fillers": _DE_FILLERS, "propaganda": _DE_PROP, "clean": _DE_CLEAN},
    "fr": {"fillers": _FR_FILLERS, "propaganda": _FR_PROP, "clean": _FR_CLEAN},
    "it": {"fillers": _IT_FILLERS, "propaganda": _IT_PROP, "clean": _IT_CLEAN},
    "ro": {"fillers": _RO_FILLERS, "propaganda": _RO_PROP, "clean": _RO_CLEAN},
    "ru": {"fillers": _RU_FILLERS, "propaganda": _RU_PROP, "clean": _RU_CLEAN},
    "uk": {"fillers": _UK_FILLERS, "propaganda": _UK_PROP, "clean": _UK_CLEAN},
}


def synth_document(language: str, label: str, rng: random.Random) -> str:
    """One synthetic document: shared fillers plus class-marker sentences."""
    material = MATERIAL.get(language)
    if material is None:
        raise DataError(f"no synthesis material for language {language!r}")
    pool = material["propaganda"] if label == LABEL_PROPAGANDA else material["clean"]
    sentences = rng.sample(material["fillers"], rng.randint(3, 6))
    sentences += rng.sample(pool, rng.randint(2, 4))
    rng.shuffle(sentences)
    return " ".join(sentences)


def synth_corpus(language: str, n_docs: int, seed: int = 13) -> list[CorpusRecord]:
    """A balanced two-class corpus of ``n_docs`` documents, seeded and
    shuffled so fold splits see both classes everywhere."""
    if n_docs < 2:
        raise DataError("need at least 2 documents")
    rng = random.Random(seed)
    labels = [LABEL_PROPAGANDA] * (n_docs // 2) + [LABEL_NONE] * (n_docs - n_docs // 2)
    rng.shuffle(labels)
    return [
        CorpusRecord(text=synth_document(language, label, rng), label=label, language=language)
        for label in labels
    ]


def synth_mixed_corpus(languages: list[str], n_per_language: int, seed: int = 13) -> list[CorpusRecord]:
    records = []
    for offset, language in enumerate(sorted(languages)):
        records.extend(synth_corpus(language, n_per_language, seed + offset))
    return records
