#!/usr/bin/env python3
"""Write the fixture data set under fixtures/.

Inflection tables are expanded from compact paradigm descriptions, frequency
tables are either transcriptions (flagged with `# evidence=transcribed`) or
synthetic, and word vectors are built from class axes plus seeded noise.

    python3 tools/author_fixtures.py [--out fixtures]
"""

import argparse
import json
import math
import os
import random

import numpy as np

CASES = ["nom", "gen", "dat", "acc"]
NUMS = ["sg", "pl"]
GENDERS_DE = ["masc", "fem", "neut"]
GENDERS_RO = ["masc", "fem"]
SCENES = {
    "BEWEGUNG": (["Flucht", "Reise", "Umzug"], ["huida", "viaje", "mudanza"], ["fuite", "voyage", "déménagement"]),
    "LOKATION": (["Anwesenheit", "Abwesenheit", "Aufenthalt"], ["presencia", "ausencia", "estancia"],
                 ["présence", "absence", "séjour"]),
    "AUSDRUCK": (["Gespräch", "Diskussion", "Frage", "Antwort", "Text", "Video"],
                 ["conversación", "discusión", "pregunta", "respuesta", "texto", "video"],
                 ["conversation", "discussion", "question", "réponse", "texte", "vidéo"]),
    "AFFIZIERTHEIT": (["Tod", "Zunahme", "Schmerz", "Liebe"], ["muerte", "aumento", "dolor", "amor"],
                      ["mort", "augmentation", "douleur", "amour"]),
    "KLASSIFIKATION": (["Geruch", "Geschmack", "Farbe", "Breite"], ["olor", "sabor", "color", "anchura"],
                       ["odeur", "saveur", "couleur", "largeur"]),
}
CORPUS = {"de": 19807413543, "es": 9536237112, "fr": 10612000000}

# ---------------------------------------------------------------- German nouns

G = {"m": "masc", "f": "fem", "n": "neut"}


def dat_pl(pl):
    return pl if pl.endswith("n") or pl.endswith("s") else pl + "n"


def noun_de(lemma, g, gen, pl, link=None, weak=None):
    """gen: genitive singular suffix; weak: suffix of the oblique singular of weak masculines."""
    if weak is not None:
        obl = lemma + weak
        forms = {"nom.sg": lemma, "gen.sg": obl, "dat.sg": obl, "acc.sg": obl}
        pl = pl or obl
    else:
        forms = {"nom.sg": lemma, "gen.sg": lemma + gen, "dat.sg": lemma, "acc.sg": lemma}
    forms.update({"nom.pl": pl, "gen.pl": pl, "dat.pl": dat_pl(pl), "acc.pl": pl})
    e = {"id": lemma, "lemma": lemma, "pos": "noun", "gender": G[g], "forms": forms}
    if link is not None:
        e["compound_link"] = link
    return e


# lemma gender gen-suffix plural [link] ; "W:en" marks a weak masculine
DE_NOUNS = """
Text m es Texte
Schmerz m es Schmerzen
Diskussion f - Diskussionen
Antwort f - Antworten ~
Farbe f - Farben
Geruch m es Gerüche
Flucht f - Fluchten
Reise f - Reisen
Umzug m es Umzüge
Anwesenheit f - Anwesenheiten
Abwesenheit f - Abwesenheiten
Aufenthalt m es Aufenthalte
Gespräch n es Gespräche
Frage f - Fragen
Video n s Videos
Tod m es Tode
Zunahme f - Zunahmen
Liebe f - Lieben
Geschmack m es Geschmäcke
Breite f - Breiten
Lied n es Lieder ~
Bibel f - Bibeln
Buch n es Bücher
Autor m s Autoren en
Band f - Bands
Song m s Songs ~
Petition f - Petitionen
Seite f - Seiten
Artikel m s Artikel
Mail f - Mails
Anzeige f - Anzeigen
Rede f - Reden
Autorin f - Autorinnen
Urkunde f - Urkunden
E-Mail f - E-Mails
Webseite f - Webseiten
Evangelium n s Evangelien
Jahr n es Jahre
Monat m s Monate
Architekt W:en
Dichter m s Dichter
Hersteller m s Hersteller
Journalistin f - Journalistinnen
Künstler m s Künstler ~
Philosoph W:en
Sänger m s Sänger
Schriftsteller m s Schriftsteller
Detektiv m s Detektive
Schüler m s Schüler ~
Teilnehmer m s Teilnehmer
Patient W:en
Verlag m es Verlage s
Konzern m s Konzerne ~
Uni f - Unis
Hochschule f - Hochschulen
EU f - EU
Nato f - Nato
Bundesregierung f - Bundesregierungen s
Landesregierung f - Landesregierungen s
Regierung f - Regierungen s
Senat m es Senate
Verwaltung f - Verwaltungen
Stadtverwaltung f - Stadtverwaltungen
Polizei f - Polizeien
Armee f - Armeen
Verein m s Vereine
Klub m s Klubs
Cousine f - Cousinen
Mutter f - Mütter
Vater m s Väter
Faschist W:en
Kommunist W:en
Papst m es Päpste
Geschäftsführerin f - Geschäftsführerinnen
Agnostiker m s Agnostiker
Paulus m - Paulus
Mia f - Mias
Lena f - Lenas
Jury f - Jurys
Akademiker m s Akademiker
Akademikerin f - Akademikerinnen
Gastprofessor m s Gastprofessoren
Dozent W:en
Englischlehrer m s Englischlehrer
Englischlehrerin f - Englischlehrerinnen
Erzieher m s Erzieher
Erzieherin f - Erzieherinnen
Kopf m es Köpfe ~
Rücken m s Rücken ~
Bauch m es Bäuche ~
Auge n s Augen n
Haar n es Haare ~
Hals m es Hälse ~
Nacken m s Nacken ~
Zahn m es Zähne ~
Ohr n es Ohren en
Glied n es Glieder er
Muskel m s Muskeln ~
Gelenk n es Gelenke ~
Knochen m s Knochen ~
Haut f - Häute ~
Herz n ens Herzen ~
Magen m s Mägen ~
Eierstock m es Eierstöcke ~
Hund m es Hunde
Katze f - Katzen
Lippenstift m es Lippenstifte
Puder m s Puder
Kleid n es Kleider
Hemd n es Hemden
Auto n s Autos
Zug m es Züge
Himmel m s Himmel
Wasser n s Wasser
Meer n es Meere
Blatt n es Blätter
Blut n es Blut
Wand f - Wände
Fell n es Felle
Brot n es Brote
Kaffee m s Kaffees
Knoblauch m s Knoblauche
Zwiebel f - Zwiebeln
Rauch m s Rauche
Gas n es Gase
Benzin n s Benzine
Bemerkung f - Bemerkungen s
Lösung f - Lösungen s
Erklärung f - Erklärungen s
Ankündigung f - Ankündigungen s
Beschreibung f - Beschreibungen s
Abschied m es Abschiede s
Predigt f - Predigten ~
Presse f - Pressen ~
Zeitung f - Zeitungen s
Gesetz n es Gesetze es
Anfrage f - Anfragen
Bitte f - Bitten
Kritik f - Kritiken
Vorwurf m es Vorwürfe
Forderung f - Forderungen
Thema n s Themen
Zukunft f - Zukünfte
Sinn m es Sinne
Rolle f - Rollen
Problem n s Probleme
Einführung f - Einführungen
Umgang m es Umgänge
Inhalt m es Inhalte
Möglichkeit f - Möglichkeiten
Geschichte f - Geschichten
Hochzeit f - Hochzeiten
Krieg m es Kriege
Wahl f - Wahlen
Versuchung f - Versuchungen
Angst f - Ängste
Trauer f - Trauern
Freude f - Freuden
Gewalt f - Gewalten
Temperatur f - Temperaturen
Preis m es Preise
Zahl f - Zahlen
Stadt f - Städte
Land n es Länder
Heimat f - Heimaten
Gefängnis n ses Gefängnisse
Haus n es Häuser
Schule f - Schulen
Krankheit f - Krankheiten
Unfall m s Unfälle
Atheist W:en
Christ W:en
Sozialist W:en
Bundeswehr f - Bundeswehren
Chor m es Chöre
UNO f - UNO
Bürgermeister m s Bürgermeister
Akademie f - Akademien
Firma f - Firmen
Kommission f - Kommissionen s
Straße f - Straßen
Fluss m es Flüsse
Minister m s Minister
"""


def parse_de_nouns():
    out = {}
    for line in DE_NOUNS.strip().splitlines():
        parts = line.split()
        lemma = parts[0]
        if parts[1].startswith("W:"):
            e = noun_de(lemma, "m", None, None, weak=parts[1][2:])
            link = parts[2] if len(parts) > 2 else None
        else:
            g, gen, pl = parts[1], parts[2], parts[3]
            gen = "" if gen == "-" else gen
            link = parts[4] if len(parts) > 4 else None
            e = noun_de(lemma, g, gen, pl)
        if link is not None:
            e["compound_link"] = "" if link == "~" else link
        out[lemma] = e
    # weak masculines take the linking element -en
    for w in ["Architekt", "Philosoph", "Patient", "Dozent"]:
        out[w]["compound_link"] = "en"
    return out


# ----------------------------------------------------------- German adjectives

ENDINGS = {
    "weak": {("nom", "sg"): ("e", "e", "e"), ("acc", "sg"): ("en", "e", "e"), ("gen", "sg"): ("en",) * 3,
             ("dat", "sg"): ("en",) * 3, ("nom", "pl"): ("en",) * 3, ("acc", "pl"): ("en",) * 3,
             ("gen", "pl"): ("en",) * 3, ("dat", "pl"): ("en",) * 3},
    "mixed": {("nom", "sg"): ("er", "e", "es"), ("acc", "sg"): ("en", "e", "es"), ("gen", "sg"): ("en",) * 3,
              ("dat", "sg"): ("en",) * 3, ("nom", "pl"): ("en",) * 3, ("acc", "pl"): ("en",) * 3,
              ("gen", "pl"): ("en",) * 3, ("dat", "pl"): ("en",) * 3},
    "strong": {("nom", "sg"): ("er", "e", "es"), ("acc", "sg"): ("en", "e", "es"), ("gen", "sg"): ("en", "er", "en"),
               ("dat", "sg"): ("em", "er", "em"), ("nom", "pl"): ("e",) * 3, ("acc", "pl"): ("e",) * 3,
               ("gen", "pl"): ("er",) * 3, ("dat", "pl"): ("en",) * 3},
}


def adj_de(lemma, stem=None):
    stem = stem or lemma
    forms = {}
    for cls, table in ENDINGS.items():
        for (case, num), ends in table.items():
            for g, end in zip(GENDERS_DE, ends):
                forms[f"{cls}.{g}.{case}.{num}"] = stem + end
    return {"id": lemma, "lemma": lemma, "pos": "adjective", "forms": forms}


DE_ADJECTIVES = {
    # adjective+Schmerz list and the experiencer slot of Schmerz
    "stark": None, "chronisch": None, "groß": None, "stechend": None, "körperlich": None, "heftig": None,
    "akut": None, "leicht": None, "brennend": None, "seelisch": None, "psychisch": None, "physisch": None,
    # preview adjectives
    "kurz": None, "bekannt": None, "lang": None, "alt": None, "deutsch": None, "langweilig": None,
    "ausführlich": None, "literarisch": None, "komisch": None, "spanisch": None, "offiziell": None,
    "russisch": None, "endgültig": None, "schlau": None, "vollständig": None, "mächtig": None, "nett": None,
    "schwierig": None, "privat": None, "neu": None, "jung": None, "erfahren": None, "streng": None,
    "regional": None, "zuständig": None, "knapp": None, "klar": None, "dringend": None, "kritisch": None,
    "wichtig": None, "schnell": None,
    # author adjectives (Arg1.3 of Text), classifying adjective (Arg5.1)
    "platonisch": None, "aristotelisch": None, "kantisch": None, "homerisch": None, "liturgisch": None,
    # head adjectives of Geruch and other frames
    "angenehm": None, "unangenehm": None, "übel": "übl", "intensiv": None, "süß": None, "bitter": None,
    "frisch": None, "rot": None, "dunkel": "dunkl", "hell": None, "plötzlich": None, "dauerhaft": None,
}

# ------------------------------------------------------------------ ontology

LABELS_ES = {
    "belebt.menschlich.organisation.militär": "animado humano organización militar",
    "belebt.menschlich.assoziation.freizeit": "animado humano asociación tiempo libre",
    "belebt.menschlich.beruf.ausbildung": "animado humano profesión educación",
    "belebt.menschlich.organisation.regierung": "animado humano organización gubernamental",
    "belebt.menschlich.familie": "animado humano familia",
    "belebt.menschlich.ideologie": "animado humano ideología política",
    "belebt.menschlich.organisation.unternehmen": "animado humano organización empresarial",
    "belebt.menschlich.beruf": "animado humano profesión",
    "belebt.menschlich.organisation.politik": "animado humano organización política",
    "belebt.menschlich.amt": "animado humano cargo",
    "belebt.menschlich.glaube": "animado humano creencia religiosa",
    "belebt.menschlich.organisation.bildung": "animado humano organización educativa",
}

# path -> members (de). Interior nodes may be empty.
DE_ONTOLOGY = {
    "belebt": [],
    "belebt.menschlich": [],
    "belebt.menschlich.beruf": ["Architekt", "Hersteller", "Künstler", "Philosoph", "Sänger", "Detektiv", "Minister"],
    "belebt.menschlich.urheber": ["Autor", "Autorin", "Dichter", "Journalistin", "Schriftsteller"],
    "belebt.menschlich.beruf.ausbildung": ["Akademiker", "Akademikerin", "Gastprofessor", "Dozent",
                                           "Englischlehrer", "Englischlehrerin", "Erzieher", "Erzieherin"],
    "belebt.menschlich.eigenschaft": ["Schüler", "Teilnehmer", "Patient"],
    "belebt.menschlich.organisation": [],
    "belebt.menschlich.organisation.unternehmen": ["Verlag", "Konzern", "Firma"],
    "belebt.menschlich.organisation.bildung": ["Uni", "Hochschule", "Akademie"],
    "belebt.menschlich.organisation.politik": ["EU", "Nato", "UNO", "Kommission"],
    "belebt.menschlich.organisation.regierung": ["Bundesregierung", "Landesregierung", "Regierung", "Senat",
                                                 "Verwaltung", "Stadtverwaltung"],
    "belebt.menschlich.organisation.militär": ["Polizei", "Armee", "Bundeswehr"],
    "belebt.menschlich.assoziation": [],
    "belebt.menschlich.assoziation.freizeit": ["Verein", "Klub", "Chor"],
    "belebt.menschlich.familie": ["Cousine", "Mutter", "Vater"],
    "belebt.menschlich.ideologie": ["Faschist", "Kommunist", "Sozialist"],
    "belebt.menschlich.amt": ["Papst", "Geschäftsführerin", "Bürgermeister"],
    "belebt.menschlich.glaube": ["Agnostiker", "Atheist", "Christ"],
    "belebt.menschlich.eigenname": ["Paulus", "Mia", "Lena"],
    "belebt.menschlich.kollektiv": ["Jury", "Band"],
    "belebt.menschlich.körperteil": [],
    "belebt.menschlich.körperteil.extern": ["Kopf", "Rücken", "Bauch", "Auge", "Haar", "Hals", "Nacken", "Zahn",
                                            "Ohr", "Glied"],
    "belebt.menschlich.körperteil.intern": [],
    "belebt.menschlich.körperteil.intern.muskel/knochen": ["Muskel", "Gelenk", "Knochen"],
    "belebt.menschlich.körperteil.beschichtung": ["Haut"],
    "belebt.menschlich.körperteil.organ": ["Eierstock", "Herz", "Magen"],
    "belebt.tierisch": ["Hund", "Katze"],
    "materiell": [],
    "materiell.gegenstand": [],
    "materiell.gegenstand.schönheitspflege": [],
    "materiell.gegenstand.schönheitspflege.kosmetik": ["Lippenstift"],
    "materiell.gegenstand.schönheitspflege.pflege": ["Puder"],
    "materiell.gegenstand.kleidung": ["Kleid", "Hemd"],
    "materiell.gegenstand.fahrzeug": ["Auto", "Zug"],
    "materiell.schriftstück": ["Buch", "Bibel", "Urkunde", "Petition", "Evangelium", "Artikel", "Anzeige", "Mail",
                               "E-Mail", "Seite", "Webseite"],
    "materiell.natur": ["Himmel", "Wasser", "Meer", "Blatt", "Wand", "Fell"],
    "materiell.nahrung": ["Brot", "Kaffee", "Knoblauch", "Zwiebel"],
    "materiell.substanz": ["Rauch", "Gas", "Benzin", "Blut"],
    "abstrakt": [],
    "abstrakt.kommunikation": [],
    "abstrakt.kommunikation.textsorte": ["Bemerkung", "Lösung", "Antwort", "Erklärung", "Ankündigung",
                                         "Beschreibung"],
    "abstrakt.kommunikation.rede": ["Rede"],
    "abstrakt.kommunikation.medien": ["Presse", "Zeitung"],
    "abstrakt.intellektuell": [],
    "abstrakt.intellektuell.kommunikation": ["Anfrage", "Frage", "Bitte", "Kritik", "Vorwurf", "Forderung"],
    "abstrakt.intellektuell.thema": ["Thema", "Zukunft", "Sinn", "Rolle", "Problem", "Einführung", "Umgang",
                                     "Inhalt", "Möglichkeit", "Geschichte"],
    "abstrakt.kunst": [],
    "abstrakt.kunst.musik": ["Lied", "Song"],
    "abstrakt.ereignis": ["Abschied", "Hochzeit", "Krieg", "Wahl", "Unfall"],
    "abstrakt.religion": ["Predigt", "Versuchung"],
    "abstrakt.gefühl": ["Angst", "Trauer", "Freude"],
    "abstrakt.zustand": ["Krankheit"],
    "abstrakt.menge": ["Gewalt", "Temperatur", "Preis", "Zahl"],
    "abstrakt.norm": ["Gesetz"],
    "ort": [],
    "ort.siedlung": ["Stadt", "Land", "Heimat"],
    "ort.verkehr": ["Straße", "Fluss"],
    "ort.gebäude": ["Gefängnis", "Haus", "Schule"],
    "zeit": ["Jahr", "Monat"],
    "qualität": [],
    "qualität.bereich": ["körperlich", "seelisch", "psychisch", "physisch"],
    "qualität.urheberschaft": ["platonisch", "aristotelisch", "kantisch", "homerisch"],
    "qualität.kult": ["liturgisch"],
}

EXTRA_TAGS = {
    "belebt.menschlich.körperteil": {"sumo": "BodyPart+ BodyJunction+ Organ+", "eponyms": "external_body_part",
                                     "blc": "05220461-n body_part", "domain": "anatomy",
                                     "top": "1stOrderEntity+ Living+ Part+"},
}


def ontology_doc(lang, tree, labels):
    nodes = []
    for path in sorted(tree, key=lambda p: p.split(".")):
        tags = dict(EXTRA_TAGS.get(path, {}))
        if path in labels:
            tags["label"] = labels[path]
        node = {"path": path.split("."), "members": sorted(tree[path])}
        if tags:
            node["tags"] = tags
        nodes.append(node)
    return {"language": lang, "nodes": nodes}


# ------------------------------------------------------------ pattern helpers

def ref(s):
    i, v = s[3:].split(".")
    return {"index": int(i), "variant": int(v)}


def marks(case=None, definiteness=None, number=None):
    m = {}
    if case:
        m["case"] = case
    if definiteness:
        m["definiteness"] = definiteness
    if number:
        m["number"] = number
    return m


def det(case=None, definiteness=None):
    s = {"kind": "determiner"}
    m = marks(case, definiteness)
    if m:
        s["marks"] = m
    return s


def adj():
    return {"kind": "adjective", "optional": True}


def badj(arg):
    return {"kind": "adjective", "binds": ref(arg)}


def head():
    return {"kind": "head"}


def fill(arg, case=None):
    s = {"kind": "argument_filler", "binds": ref(arg)}
    if case:
        s["marks"] = {"case": case}
    return s


def prep(text, case=None):
    s = {"kind": "preposition", "fixed_text": text}
    if case:
        s["marks"] = {"case": case}
    return s


def cm(arg):
    return {"kind": "compound_modifier", "binds": ref(arg)}


def pattern(pid, label, slots):
    bound = sum(1 for s in slots if "binds" in s)
    return {"id": pid, "label": label, "arity": "mono" if bound == 1 else "bi", "slots": slots}


def letter(arg):
    i, v = arg[3:].split(".")
    return i + "abcdefgh"[int(v) - 1]


CASE_LETTER = {"gen": "G", "dat": "D", "acc": "A", None: ""}
CASE_ES = {"gen": "genitivo", "dat": "dativo", "acc": "acusativo"}

# ---------------------------------------------------------- frequency tables

TABLES = {}       # file name -> text
ANNOTATIONS = {}  # file name -> list


def pm(count, lang, digits=5):
    return f"{count / CORPUS[lang] * 1e6:.{digits}f}"


def table_text(lang, template, rows, evidence, pattern_total=None, comment=None, explicit=False):
    """rows: (rank, filler, count, per_million or None, lexeme)"""
    out = [f"# corpus_size_tokens={CORPUS[lang]}", f"# template={template}", f"# evidence={evidence}"]
    if pattern_total is not None:
        out.append(f"# pattern_total={pattern_total}")
    if comment:
        out.append(f"# {comment}")
    out.append("rank\tfiller\tcount\tper_million" + ("\tlexeme" if explicit else ""))
    for rank, filler, count, stated, lexeme in rows:
        stated = stated if stated is not None else pm(count, lang)
        line = f"{rank}\t{filler}\t{count}\t{stated}"
        if explicit:
            line += f"\t{lexeme}"
        out.append(line)
    return "\n".join(out) + "\n"


def required(lexemes, slot, note=""):
    out = []
    for x in lexemes:
        a = {"filler": x, "verdict": "valency_required", "slot": ref(slot)}
        if note:
            a["note"] = note
        out.append(a)
    return out


def other(lexemes, verdict, note):
    return [{"filler": x, "verdict": verdict, "note": note} for x in lexemes]


def synthetic_rows(template, lexemes, start, ratio, rng, first_rank=1, noise=()):
    """Descending counts for `lexemes`, interleaving `noise` (lexeme, rank offset) rows."""
    order = list(lexemes)
    for lex, pos in noise:
        order.insert(min(pos, len(order)), lex)
    rows = []
    count = start
    for k, lex in enumerate(order):
        rows.append((first_rank + k, template.format(lex), int(count), None, lex))
        count = max(5, count * ratio * rng.uniform(0.93, 1.0))
    return rows


# ------------------------------------------------------------- vector model

AFFINITY = {
    "abstrakt.kommunikation.textsorte": ["akademisch"],
    "belebt.menschlich.beruf.ausbildung": ["akademisch"],
    "belebt.menschlich.urheber": ["akademisch", "diskurs"],
    "belebt.menschlich.organisation.regierung": ["amtlich", "diskurs"],
    "belebt.menschlich.organisation.politik": ["amtlich"],
    "abstrakt.intellektuell.kommunikation": ["amtlich"],
    "abstrakt.intellektuell.thema": ["diskurs"],
    "abstrakt.norm": ["diskurs"],
    "abstrakt.ereignis": ["diskurs"],
    "abstrakt.religion": ["diskurs"],
    "materiell.schriftstück": ["diskurs"],
    "abstrakt.kunst.musik": ["diskurs"],
    "qualität.urheberschaft": ["diskurs"],
    "abstrakt.kommunikation.medien": ["diskurs"],
    "belebt.menschlich.körperteil": ["leib"],
    "qualität.bereich": ["leib"],
}


class VectorSpace:
    def __init__(self, dim, seed):
        self.dim = dim
        self.rng = np.random.default_rng(seed)
        self.axes = {}

    def axis(self, name):
        if name not in self.axes:
            v = self.rng.standard_normal(self.dim)
            self.axes[name] = v / np.linalg.norm(v)
        return self.axes[name]

    def vector(self, weighted, noise=0.35):
        v = np.zeros(self.dim)
        for name, w in weighted:
            v += w * self.axis(name)
        v += noise * self.rng.standard_normal(self.dim) / math.sqrt(self.dim)
        return v / np.linalg.norm(v)


def class_axes(paths):
    out = []
    for path in paths:
        segs = path.split(".")
        for d in range(1, len(segs) + 1):
            out.append((".".join(segs[:d]), 0.4 + 0.2 * d))
        for key, affs in AFFINITY.items():
            if path == key or path.startswith(key + "."):
                out.extend((a, 2.0) for a in affs)
    return out


def cos(a, b):
    return float(np.dot(a, b) / (np.linalg.norm(a) * np.linalg.norm(b)))


def vectors_text(vectors):
    words = sorted(vectors)
    dim = len(next(iter(vectors.values())))
    lines = [f"{len(words)} {dim}"]
    for w in words:
        lines.append(w.replace(" ", "_") + " " + " ".join(f"{x:.6f}" for x in vectors[w]))
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------ German frames

def members_of(tree, classes):
    out = []
    for c in classes:
        for path, mem in tree.items():
            if path == c or path.startswith(c + "."):
                for m in mem:
                    if m not in out:
                        out.append(m)
    return out


def fname(s):
    return s.lower().translate(str.maketrans({"ä": "ae", "ö": "oe", "ü": "ue", "ß": "ss", "é": "e", "è": "e",
                                             "á": "a", "í": "i", "ó": "o", "ú": "u", "ñ": "n", "ç": "c"}))


TEXT_GEN_TOP = [
    ("Lied", 1913, "0.09658"), ("Bibel", 1820, "0.09188"), ("Buch", 866, "0.04372"), ("Autor", 844, "0.04261"),
    ("Band", 837, "0.04226"), ("Song", 755, "0.03812"), ("neu Testament", 649, "0.03276"),
    ("alt Testament", 509, "0.02570"), ("Petition", 507, "0.02560"), ("Seite", 487, "0.02459"),
    ("Artikel", 467, "0.02358"), ("Mail", 365, "0.01843"), ("Anzeige", 345, "0.01742"), ("Rede", 332, "0.01676"),
    ("heilig Schrift", 331, "0.01671"), ("Autorin", 331, "0.01671"), ("Urkunde", 326, "0.01646"),
    ("E-Mail", 324, "0.01636"), ("Webseite", 323, "0.01631"), ("Evangelium", 318, "0.01605"),
]

# synthetic continuation of the Text+genitive list, most frequent first; members of
# TIED_AGENTS share the count of the row before them
TEXT_AGENTS = [
    "Detektiv", "Akademiker", "Akademikerin", "Bundesregierung", "Polizei", "Verein", "Cousine", "Faschist", "Konzern", "Nato",
    "Geschäftsführerin", "Agnostiker", "Hochschule", "Architekt", "Dichter", "Künstler", "Schriftsteller",
    "Philosoph", "Sänger", "Journalistin", "Hersteller", "Schüler", "Teilnehmer", "Jury", "Paulus", "Papst",
    "Verlag", "Uni", "EU", "Landesregierung", "Regierung", "Senat", "Verwaltung", "Gastprofessor", "Dozent",
    "Erzieher", "Englischlehrer", "Englischlehrerin", "Erzieherin", "Armee", "Bundeswehr", "Klub",
    "Chor", "Mutter", "Vater", "Kommunist", "Sozialist", "Firma", "UNO", "Bürgermeister", "Atheist", "Christ",
    "Akademie", "Stadtverwaltung", "Mia", "Lena", "Minister", "Kommission",
]
TIED_AGENTS = {"Akademikerin"}

TEXT_HEAD_ADJ = ["kurz", "lang", "ausführlich", "langweilig", "literarisch", "komisch", "offiziell", "endgültig",
                 "vollständig", "schwierig", "neu", "alt", "bekannt", "wichtig", "klar"]
PERSON_ADJ = ["bekannt", "deutsch", "alt", "spanisch", "russisch", "schlau", "mächtig", "nett", "privat", "jung",
              "erfahren", "streng", "regional", "zuständig"]

TEXT_PREVIEWS = {
    "belebt.menschlich.organisation.militär": ("langweilig", "deutsch"),
    "belebt.menschlich.assoziation.freizeit": ("lang", "alt"),
    "belebt.menschlich.beruf.ausbildung": ("kurz", "bekannt"),
    "belebt.menschlich.organisation.regierung": ("ausführlich", "deutsch"),
    "belebt.menschlich.familie": ("literarisch", "alt"),
    "belebt.menschlich.ideologie": ("komisch", "spanisch"),
    "belebt.menschlich.organisation.unternehmen": ("offiziell", "russisch"),
    "belebt.menschlich.beruf": ("endgültig", "schlau"),
    "belebt.menschlich.organisation.politik": ("vollständig", "mächtig"),
    "belebt.menschlich.amt": ("bekannt", "nett"),
    "belebt.menschlich.glaube": ("schwierig", "bekannt"),
    "belebt.menschlich.organisation.bildung": ("lang", "privat"),
}


def slot(arg, role, gloss=""):
    i, v = arg[3:].split(".")
    s = {"index": int(i), "variant": int(v), "role": role}
    if gloss:
        s["role_gloss"] = gloss
    return s


def frame(lemma, gender, scene, slots, patterns, evidence):
    return {"lemma": lemma, "gender": gender, "inflection_ref": lemma, "scene": scene, "evidence": evidence,
            "slots": slots, "patterns": patterns}


def scene_of(lemma):
    for scene, (de, es, fr) in SCENES.items():
        if lemma in de or lemma in es or lemma in fr:
            return scene
    raise KeyError(lemma)


def text_frame(rng):
    L = "Text"
    slots = [
        slot("Arg1.1", "AGENS", "derjenige, der die Handlung durchführt"), slot("Arg1.2", "AGENS"),
        slot("Arg1.3", "AGENS"), slot("Arg1.4", "AGENS"), slot("Arg2.1", "MEDIUM"), slot("Arg3.1", "THEMA"),
        slot("Arg4.1", "INHALT"), slot("Arg4.2", "INHALT"), slot("Arg5.1", "KLASSIFIKATION"),
        slot("Arg5.2", "KLASSIFIKATION"),
    ]
    pats = [
        pattern("det+Text+gen+N1aG", "determinante+Text+determinante genitivo+actante N1aG",
                [det(), head(), det("gen"), fill("Arg1.1", "gen")]),
        pattern("det+adj+Text+gen+adj+N1aG", "determinante+adjetivo+Text+determinante genitivo+adjetivo+actante N1aG",
                [det(), adj(), head(), det("gen"), adj(), fill("Arg1.1", "gen")]),
        pattern("det+adj+Text+gen+adj+N2aG", "determinante+adjetivo+Text+determinante genitivo+adjetivo+actante N2aG",
                [det(), adj(), head(), det("gen"), adj(), fill("Arg2.1", "gen")]),
        pattern("det+adj+Text+von+det+adj+N1bD", "determinante+adjetivo+Text+von+determinante dativo+adjetivo+actante N1bD",
                [det(), adj(), head(), prep("von", "dat"), det(), adj(), fill("Arg1.2")]),
        pattern("det+adj+Text+über+det+adj+N3aA", "determinante+adjetivo+Text+über+determinante acusativo+adjetivo+actante N3aA",
                [det(), adj(), head(), prep("über", "acc"), det(), adj(), fill("Arg3.1")]),
        pattern("det+A1cN+Text", "determinante+actante A1cN+Text", [det(), badj("Arg1.3"), head()]),
        pattern("det+arg5c+head+gen+N1a", "determinante+actante N5b+Text+determinante genitivo+actante N1aG",
                [det(), cm("Arg5.2"), head(), det("gen"), fill("Arg1.1", "gen")]),
        pattern("det+arg1c+Text+über+det+N3aA", "determinante+actante N1d+Text+über+determinante acusativo+actante N3aA",
                [det(), cm("Arg1.4"), head(), prep("über", "acc"), det(), fill("Arg3.1")]),
        pattern("det+Text+gen+N2aG+über+det+N3aA",
                "determinante+Text+determinante genitivo+actante N2aG+über+determinante acusativo+actante N3aA",
                [det(), head(), det("gen"), fill("Arg2.1", "gen"), prep("über", "acc"), det(), fill("Arg3.1")]),
    ]
    # Arg1.1 / Arg2.1: genitive list
    rows = [(k + 1, f"Text die {lex}", c, pmv, lex) for k, (lex, c, pmv) in enumerate(TEXT_GEN_TOP)]
    count = 316
    rank = 21
    for i, lex in enumerate(TEXT_AGENTS):
        rows.append((rank, f"Text die {lex}", count, None, lex))
        rank += 1
        if i + 1 < len(TEXT_AGENTS) and TEXT_AGENTS[i + 1] in TIED_AGENTS:
            continue
        count -= rng.randint(2, 4)
        if count < 103:
            raise SystemExit("Text agent list too long")
    rows += [(103, "Text die Jahr", 102, None, "Jahr"), (110, "Text die Erklärung", 97, None, "Erklärung"),
             (124, "Text die Monat", 88, None, "Monat"), (131, "Text die Lehrer", 79, None, "Lehrer")]
    TABLES["freq.text_gen.tsv"] = table_text(
        "de", "Text die {}", rows, "transcribed",
        comment="ranks 1-20 transcribed; later rows synthetic, spaced around the transcribed Jahr/Monat positions")
    medium = ["Lied", "Bibel", "Buch", "Song", "neu Testament", "alt Testament", "Petition", "Seite", "Artikel",
              "Mail", "Anzeige", "Rede", "heilig Schrift", "Urkunde", "E-Mail", "Webseite", "Evangelium"]
    agents = ["Autor", "Band", "Autorin"] + TEXT_AGENTS
    ann_agens = (required(agents, "Arg1.1")
                 + other(medium, "not_valency", "keine Agensrolle")
                 + other(["Jahr", "Monat"], "excluded", "temporal, kein Argument")
                 + other(["Erklärung", "Lehrer"], "not_valency", "anderes Muster"))
    ann_medium = (required(medium, "Arg2.1")
                  + other(agents + ["Erklärung", "Lehrer"], "not_valency", "Agens, kein Medium")
                  + other(["Jahr", "Monat"], "excluded", "temporal, kein Argument"))
    ANNOTATIONS["de.text.Arg1.1.json"] = ann_agens
    ANNOTATIONS["de.text.Arg2.1.json"] = ann_medium

    # Arg1.2: von + dative
    von = ["Autor", "Künstler", "Schüler", "Verlag", "Konzern", "Dichter", "Schriftsteller", "Journalistin",
           "Bundesregierung", "Kommission", "Papst"]
    rows = synthetic_rows("Text von {}", von, 2300, 0.86, rng, noise=[("Jahr", 3), ("Seite", 6)])
    TABLES["freq.text_von.tsv"] = table_text("de", "Text von {}", rows, "synthetic")
    ANNOTATIONS["de.text.Arg1.2.json"] = (required(von, "Arg1.2") + other(["Jahr"], "excluded", "temporal")
                                          + other(["Seite"], "not_valency", "Ort"))

    # Arg1.3: author adjective
    adjs = ["platonisch", "aristotelisch", "kantisch", "homerisch"]
    rows = synthetic_rows("{} Text", ["neu", "kurz", "lang"] + adjs + ["literarisch"], 14000, 0.7, rng)
    TABLES["freq.text_adj.tsv"] = table_text("de", "{} Text", rows, "synthetic")
    ANNOTATIONS["de.text.Arg1.3.json"] = (required(adjs, "Arg1.3")
                                          + other(["neu", "kurz", "lang", "literarisch"], "not_valency",
                                                  "nicht valenzgefordert"))

    # Arg1.4: agent compound
    ag_c = [("Regierung", "Regierungstext"), ("Kommission", "Kommissionstext"), ("Autor", "Autorentext"),
            ("Verlag", "Verlagstext"), ("Bundesregierung", "Bundesregierungstext"), ("Künstler", "Künstlertext"),
            ("Schüler", "Schülertext"), ("Konzern", "Konzerntext"), ("Landesregierung", "Landesregierungstext")]
    rows = []
    cnt = 4100
    for k, (lex, surface) in enumerate(ag_c):
        rows.append((k + 1, surface, int(cnt), None, lex))
        cnt *= 0.72 * rng.uniform(0.93, 1.0)
    TABLES["freq.text_compound_agens.tsv"] = table_text("de", "{}text", rows, "synthetic", explicit=True)
    ANNOTATIONS["de.text.Arg1.4.json"] = required([x for x, _ in ag_c], "Arg1.4")

    # Arg3.1: über + accusative
    topics = ["Thema", "Geschichte", "Gesetz", "Krieg", "Versuchung", "Hochzeit", "Liebe", "Zukunft", "Problem",
              "Wahl", "Angst", "Freude", "Heimat", "Möglichkeit"]
    rows = synthetic_rows("Text über {}", topics, 5200, 0.84, rng, noise=[("Jahr", 4)])
    TABLES["freq.text_ueber.tsv"] = table_text("de", "Text über {}", rows, "synthetic")
    ANNOTATIONS["de.text.Arg3.1.json"] = required(topics, "Arg3.1") + other(["Jahr"], "excluded", "temporal")

    # Arg5.2: classifying compound
    cls = [("Lied", "Liedtext", 52000), ("Song", "Songtext", 31000), ("Presse", "Pressetext", 8800),
           ("Gesetz", "Gesetzestext", 7900), ("Predigt", "Predigttext", 6100), ("Zeitung", "Zeitungstext", 3900),
           ("Abschied", "Abschiedstext", 2600), ("Beschreibung", "Beschreibungstext", 2450),
           ("Lösung", "Lösungstext", 2100), ("Antwort", "Antworttext", 1750), ("Erklärung", "Erklärungstext", 1500),
           ("Bemerkung", "Bemerkungstext", 1320), ("Ankündigung", "Ankündigungstext", 1180),
           ("Rede", "Redetext", 640)]
    rows = [(k + 1, s, c, None, lex) for k, (lex, s, c) in enumerate(cls)]
    TABLES["freq.text_compound.tsv"] = table_text("de", "{}text", rows, "synthetic", explicit=True)
    ANNOTATIONS["de.text.Arg5.2.json"] = (
        required(["Presse", "Predigt", "Zeitung", "Abschied", "Beschreibung", "Lösung", "Antwort", "Erklärung",
                  "Bemerkung", "Ankündigung"], "Arg5.2")
        + other(["Lied", "Song", "Gesetz"], "not_valency", "Medium (Arg2), keine Klassifikation")
        + other(["Rede"], "excluded", "Redetext: Inhalt, nicht Textsorte"))

    cfg = {
        "lemma": L,
        "adjectives": TEXT_HEAD_ADJ,
        "slots": {
            "Arg1.1": {"table": "freq.text_gen.tsv", "annotations": "annotations/de.text.Arg1.1.json",
                       "number": "both", "adjectives": PERSON_ADJ,
                       "previews": {k: {"head": h, "filler": f} for k, (h, f) in TEXT_PREVIEWS.items()}},
            "Arg1.2": {"table": "freq.text_von.tsv", "annotations": "annotations/de.text.Arg1.2.json",
                       "adjectives": PERSON_ADJ},
            "Arg1.3": {"table": "freq.text_adj.tsv", "annotations": "annotations/de.text.Arg1.3.json"},
            "Arg1.4": {"table": "freq.text_compound_agens.tsv",
                       "annotations": "annotations/de.text.Arg1.4.json"},
            "Arg2.1": {"table": "freq.text_gen.tsv", "annotations": "annotations/de.text.Arg2.1.json",
                       "adjectives": ["alt", "neu", "bekannt"]},
            "Arg3.1": {"table": "freq.text_ueber.tsv", "annotations": "annotations/de.text.Arg3.1.json",
                       "adjectives": ["schwierig", "wichtig", "neu", "alt"]},
            "Arg5.2": {"table": "freq.text_compound.tsv", "annotations": "annotations/de.text.Arg5.2.json",
                       "number": "both",
                       "packages": [{"id": "Bemerkung-set", "class": "abstrakt.kommunikation.textsorte",
                                     "members": ["Bemerkung", "Lösung", "Antwort", "Erklärung", "Ankündigung",
                                                 "Beschreibung"]}]},
        },
    }
    return frame(L, "masc", "AUSDRUCK", slots, pats, "attested"), cfg


def schmerz_frame(rng):
    L = "Schmerz"
    slots = [slot("Arg1.1", "EXPERIENCER"), slot("Arg1.2", "EXPERIENCER"), slot("Arg2.1", "LOKALISATION"),
             slot("Arg2.2", "LOKALISATION")]
    pats = [
        pattern("det+adj+Schmerz+gen+adj+N1aG",
                "determinante+adjetivo+Schmerz+determinante genitivo+adjetivo+actante N1aG",
                [det(), adj(), head(), det("gen"), adj(), fill("Arg1.1", "gen")]),
        pattern("det+A1bN+Schmerz", "determinante+actante A1bN+Schmerz", [det(), badj("Arg1.2"), head()]),
        pattern("det+adj+arg2c+Schmerz", "determinante+adjetivo+actante N2a+Schmerz",
                [det(), adj(), cm("Arg2.1"), head()]),
        pattern("det+Schmerz+gen+N2bG", "determinante+Schmerz+determinante genitivo+actante N2bG",
                [det(), head(), det("gen"), fill("Arg2.2", "gen")]),
        pattern("det+A1bN+arg2c+Schmerz", "determinante+actante A1bN+actante N2a+Schmerz",
                [det(), badj("Arg1.2"), cm("Arg2.1"), head()]),
    ]
    tab9 = [("stark", 30125, "1.52"), ("chronisch", 21934, "1.11"), ("groß", 12875, "0.65"),
            ("stechend", 8063, "0.41"), ("körperlich", 5899, "0.30"), ("heftig", 5165, "0.26"),
            ("akut", 5045, "0.25"), ("leicht", 4624, "0.23"), ("brennend", 3673, "0.19"), ("seelisch", 3612, "0.18")]
    rows = [(k + 1, f"{lex} Schmerz", c, p, lex) for k, (lex, c, p) in enumerate(tab9)]
    TABLES["freq.schmerz_adj.tsv"] = table_text("de", "{} Schmerz", rows, "transcribed")
    ANNOTATIONS["de.schmerz.Arg1.2.json"] = (
        required(["körperlich", "seelisch"], "Arg1.2", "Ergänzung")
        + other(["stark", "chronisch", "groß", "stechend", "heftig", "akut", "leicht", "brennend"], "not_valency",
                "nicht valenzgefordert"))

    comp = [("Kopf", "Kopfschmerz", 1, 188950, "9.54"), ("Rücken", "Rückenschmerz", 2, 92363, None),
            ("Bauch", "Bauchschmerz", 3, 45907, None), ("Zahn", "Zahnschmerz", 4, 31200, None),
            ("Glied", "Gliederschmerz", 5, 24800, None), ("Hals", "Halsschmerz", 6, 19100, None),
            ("Muskel", "Muskelschmerz", 7, 15300, None), ("Gelenk", "Gelenkschmerz", 8, 12900, None),
            ("Nacken", "Nackenschmerz", 9, 8700, None), ("Ohr", "Ohrenschmerz", 12, 5200, None),
            ("Herz", "Herzschmerz", 15, 3900, None), ("Knochen", "Knochenschmerz", 21, 2600, None),
            ("Magen", "Magenschmerz", 24, 2300, None), ("Auge", "Augenschmerz", 30, 1949, None),
            ("Haut", "Hautschmerz", 234, 48, None), ("Haar", "Haarschmerz", 263, 39, None)]
    rows = [(r, s, c, p, lex) for lex, s, r, c, p in comp]
    TABLES["freq.schmerz_compound.tsv"] = table_text(
        "de", "{}schmerz", rows, "transcribed",
        comment="ranks 1-3, 30, 234, 263 transcribed; others synthetic", explicit=True)
    ANNOTATIONS["de.schmerz.Arg2.1.json"] = required([c[0] for c in comp], "Arg2.1")

    TABLES["freq.schmerz_gen.tsv"] = table_text(
        "de", "Schmerz die {}", [(107, "Schmerz die Kopf", 21, "< 0.01", "Kopf")], "transcribed")
    ANNOTATIONS["de.schmerz.Arg2.2.json"] = required(["Kopf"], "Arg2.2")

    exp = ["Patient", "Mutter", "Vater", "Schüler", "Hund", "Katze", "Teilnehmer", "Mia", "Lena"]
    rows = synthetic_rows("Schmerz die {}", exp, 1900, 0.8, rng, noise=[("Jahr", 2)])
    TABLES["freq.schmerz_gen_exp.tsv"] = table_text("de", "Schmerz die {}", rows, "synthetic")
    ANNOTATIONS["de.schmerz.Arg1.1.json"] = required(exp, "Arg1.1") + other(["Jahr"], "excluded", "temporal")

    cfg = {"lemma": L, "adjectives": ["stark", "chronisch", "heftig", "akut", "leicht", "brennend", "stechend"],
           "slots": {
               "Arg1.1": {"table": "freq.schmerz_gen_exp.tsv", "annotations": "annotations/de.schmerz.Arg1.1.json",
                          "adjectives": ["alt", "jung", "nett"]},
               "Arg1.2": {"table": "freq.schmerz_adj.tsv", "annotations": "annotations/de.schmerz.Arg1.2.json"},
               "Arg2.1": {"table": "freq.schmerz_compound.tsv",
                          "annotations": "annotations/de.schmerz.Arg2.1.json", "number": "both"},
               "Arg2.2": {"table": "freq.schmerz_gen.tsv", "annotations": "annotations/de.schmerz.Arg2.2.json"},
           }}
    return frame(L, "masc", "AFFIZIERTHEIT", slots, pats, "attested"), cfg


def diskussion_frame(rng):
    L = "Diskussion"
    slots = [slot("Arg1.1", "AGENS"), slot("Arg2.1", "THEMA"), slot("Arg2.2", "THEMA")]
    pats = [
        pattern("det+adj+Diskussion+gen+adj+N1aG",
                "determinante+adjetivo+Diskussion+determinante genitivo+adjetivo+actante N1aG",
                [det(), adj(), head(), det("gen"), adj(), fill("Arg1.1", "gen")]),
        pattern("det+adj+Diskussion+über+det+adj+N2aA",
                "determinante+adjetivo+Diskussion+über+determinante acusativo+adjetivo+actante N2aA",
                [det(), adj(), head(), prep("über", "acc"), det(), adj(), fill("Arg2.1")]),
        pattern("det+adj+Diskussion+um+det+adj+N2bA",
                "determinante+adjetivo+Diskussion+um+determinante acusativo+adjetivo+actante N2bA",
                [det(), adj(), head(), prep("um", "acc"), det(), adj(), fill("Arg2.2")]),
        pattern("det+Diskussion+gen+N1aG+über+det+N2aA",
                "determinante+Diskussion+determinante genitivo+actante N1aG+über+determinante acusativo+actante N2aA",
                [det(), head(), det("gen"), fill("Arg1.1", "gen"), prep("über", "acc"), det(), fill("Arg2.1")]),
    ]
    tab8 = [("Thema", 5189), ("Zukunft", 2886), ("Frage", 2383), ("Sinn", 1893), ("Problem", 874),
            ("Rolle", 874), ("Möglichkeit", 838), ("Inhalt", 765), ("Umgang", 743), ("Einführung", 714)]
    rows = [(k + 1, f"Diskussion über {lex}", c, None, lex) for k, (lex, c) in enumerate(tab8)]
    TABLES["freq.diskussion_ueber.tsv"] = table_text(
        "de", "Diskussion über {}", rows, "transcribed", pattern_total=114929,
        comment="pattern_total from the preposition comparison; ranks assigned by count")
    ANNOTATIONS["de.diskussion.Arg2.1.json"] = required([x for x, _ in tab8], "Arg2.1")
    um = ["Zukunft", "Rolle", "Frage", "Gesetz", "Preis", "Wahl", "Krieg", "Thema", "Gewalt"]
    rows = synthetic_rows("Diskussion um {}", um, 4900, 0.8, rng)
    TABLES["freq.diskussion_um.tsv"] = table_text("de", "Diskussion um {}", rows, "synthetic", pattern_total=110558,
                                                  comment="pattern_total from the preposition comparison")
    ANNOTATIONS["de.diskussion.Arg2.2.json"] = required(um, "Arg2.2")
    ag = ["Teilnehmer", "Schüler", "Minister", "Senat", "Kommission", "Jury", "Philosoph", "Bundesregierung",
          "Verein"]
    rows = synthetic_rows("Diskussion die {}", ag, 3100, 0.82, rng, noise=[("Jahr", 5)])
    TABLES["freq.diskussion_gen.tsv"] = table_text("de", "Diskussion die {}", rows, "synthetic")
    ANNOTATIONS["de.diskussion.Arg1.1.json"] = required(ag, "Arg1.1") + other(["Jahr"], "excluded", "temporal")
    cfg = {"lemma": L, "adjectives": ["lang", "kritisch", "wichtig", "offiziell", "kurz"],
           "slots": {
               "Arg1.1": {"table": "freq.diskussion_gen.tsv", "annotations": "annotations/de.diskussion.Arg1.1.json",
                          "adjectives": PERSON_ADJ},
               "Arg2.1": {"table": "freq.diskussion_ueber.tsv",
                          "annotations": "annotations/de.diskussion.Arg2.1.json", "adjectives": ["wichtig", "schwierig", "neu"]},
               "Arg2.2": {"table": "freq.diskussion_um.tsv", "annotations": "annotations/de.diskussion.Arg2.2.json",
                          "adjectives": ["wichtig", "schwierig", "neu"]},
           }}
    return frame(L, "fem", "AUSDRUCK", slots, pats, "attested"), cfg


def antwort_frame(rng):
    L = "Antwort"
    slots = [slot("Arg1.1", "AGENS"), slot("Arg2.1", "THEMA")]
    pats = [
        pattern("det+adj+Antwort+gen+adj+N1aG",
                "determinante+adjetivo+Antwort+determinante genitivo+adjetivo+actante N1aG",
                [det(), adj(), head(), det("gen"), adj(), fill("Arg1.1", "gen")]),
        pattern("det+adj+Antwort+auf+det+adj+N2aA",
                "determinante+adjetivo+Antwort+auf+determinante acusativo+adjetivo+actante N2aA",
                [det(), adj(), head(), prep("auf", "acc"), det(), adj(), fill("Arg2.1")]),
        pattern("det+adj+Antwort+gen+N1aG+auf+indef+N2aA",
                "determinante+adjetivo+Antwort+determinante genitivo+actante N1+auf+determinante acusativo+actante N2",
                [det(), adj(), head(), det("gen"), fill("Arg1.1", "gen"), prep("auf", "acc"),
                 det(None, "indefinite"), fill("Arg2.1")]),
    ]
    # marginals of the biargumental list, widened with synthetic rows
    n1 = [("Bundesregierung", 2480), ("Landesregierung", 910), ("Senat", 640), ("Regierung", 590),
          ("Verwaltung", 450), ("Stadtverwaltung", 330), ("Minister", 300), ("Kommission", 260),
          ("Bürgermeister", 240), ("Polizei", 210), ("Autor", 170)]
    rows = [(k + 1, f"Antwort die {lex}", c, None, lex) for k, (lex, c) in enumerate(n1)]
    TABLES["freq.antwort_gen.tsv"] = table_text("de", "Antwort die {}", rows, "synthetic",
                                                comment="ordering follows the biargumental list")
    ANNOTATIONS["de.antwort.Arg1.1.json"] = required([x for x, _ in n1], "Arg1.1")
    n2 = [("Anfrage", 6200), ("Frage", 5400), ("Kritik", 1400), ("Forderung", 980), ("Vorwurf", 870),
          ("Bitte", 650), ("Problem", 420), ("Brief", 300)]
    rows = [(k + 1, f"Antwort auf {lex}", c, None, lex) for k, (lex, c) in enumerate(n2)]
    TABLES["freq.antwort_auf.tsv"] = table_text("de", "Antwort auf {}", rows, "synthetic")
    ANNOTATIONS["de.antwort.Arg2.1.json"] = (required([x for x, _ in n2 if x != "Brief"], "Arg2.1")
                                             + other(["Brief"], "not_valency", "Medium"))
    cfg = {"lemma": L, "adjectives": ["kurz", "klar", "offiziell", "schnell", "endgültig"],
           "slots": {
               "Arg1.1": {"table": "freq.antwort_gen.tsv", "annotations": "annotations/de.antwort.Arg1.1.json",
                          "adjectives": ["zuständig", "regional", "deutsch"]},
               "Arg2.1": {"table": "freq.antwort_auf.tsv", "annotations": "annotations/de.antwort.Arg2.1.json",
                          "adjectives": ["kritisch", "dringend", "knapp"]},
           }}
    return frame(L, "fem", "AUSDRUCK", slots, pats, "attested"), cfg


def farbe_frame(rng):
    L = "Farbe"
    slots = [slot("Arg1.1", "TRÄGER")]
    pats = [pattern("det+Farbe+gen+adj+N1aG", "determinante+Farbe+determinante genitivo+adjetivo+actante N1aG",
                    [det(), head(), det("gen"), adj(), fill("Arg1.1", "gen")])]
    seq = [("Wand", 3900), ("Himmel", 3100), ("Wasser", 2650), ("Auto", 2210), ("Blatt", 1900), ("Kleid", 1620),
           ("Haus", 1480), ("Hemd", 1390), ("Meer", 1300), ("Fell", 1260), ("Lippenstift", 1210),
           ("Blut", 1100), ("Zug", 990), ("Puder", 420)]
    rows = []
    for k, (lex, c) in enumerate(seq[:-1]):
        rows.append((k + 1, f"Farbe die {lex}", c, None, lex))
    rows += [(31, "Farbe die Auge", 460, None, "Auge"), (36, "Farbe die Puder", 420, None, "Puder"),
             (38, "Farbe die Haar", 402, None, "Haar"), (54, "Farbe die Haut", 285, None, "Haut"),
             (60, "Farbe die Jahr", 250, None, "Jahr")]
    TABLES["freq.farbe_gen.tsv"] = table_text(
        "de", "Farbe die {}", rows, "transcribed", comment="ranks 31, 38, 54 transcribed; others synthetic")
    ANNOTATIONS["de.farbe.Arg1.1.json"] = (
        required([x for x, _ in seq] + ["Auge", "Haar", "Haut"], "Arg1.1") + other(["Jahr"], "excluded", "temporal"))
    cfg = {"lemma": L, "adjectives": ["rot", "hell", "dunkel", "intensiv"],
           "slots": {"Arg1.1": {"table": "freq.farbe_gen.tsv", "annotations": "annotations/de.farbe.Arg1.1.json",
                                "adjectives": ["alt", "neu", "dunkel", "hell"]}}}
    return frame(L, "fem", "KLASSIFIKATION", slots, pats, "attested"), cfg


# ------------------------------------------------- frames built from a shared scheme

P = "belebt.menschlich."
PERSONS = [P + "eigenschaft", P + "familie", P + "eigenname"]

# lemma(de) -> slot specs: (arg, role, {lang: (preposition or None, de case, with article)}, classes, number)
GEN = {"de": (None, "gen", True), "es": ("de", None, True), "fr": ("de", None, True)}


def pp(de, case, es, fr, article=True):
    return {"de": (de, case, article), "es": (es, None, article), "fr": (fr, None, article)}


GENERIC = {
    "Flucht": [("Arg1.1", "AGENS", GEN, PERSONS, "sg"),
               ("Arg2.1", "AUSGANGSPUNKT", pp("aus", "dat", "de", "de"), ["ort.gebäude", "ort.siedlung"], "sg")],
    "Reise": [("Arg1.1", "AGENS", GEN, PERSONS + [P + "beruf"], "sg"),
              ("Arg2.1", "ZIEL", pp("in", "acc", "a", "à"), ["ort.siedlung", "ort.gebäude"], "sg")],
    "Umzug": [("Arg1.1", "AGENS", GEN, [P + "familie", P + "organisation.unternehmen",
                                        P + "organisation.bildung"], "sg"),
              ("Arg2.1", "ZIEL", pp("in", "acc", "a", "à"), ["ort.gebäude", "ort.siedlung"], "sg")],
    "Anwesenheit": [("Arg1.1", "THEMA", GEN, [P + "organisation.politik", P + "organisation.militär", P + "amt",
                                               P + "familie"], "sg")],
    "Abwesenheit": [("Arg1.1", "THEMA", GEN, [P + "organisation.politik", P + "organisation.militär", P + "amt",
                                               P + "familie"], "sg")],
    "Aufenthalt": [("Arg1.1", "AGENS", GEN, [P + "eigenschaft", P + "familie", P + "amt"], "sg"),
                   ("Arg2.1", "LOKATION", pp("in", "dat", "en", "dans"), ["ort.gebäude", "ort.siedlung"], "sg")],
    "Gespräch": [("Arg1.1", "AGENS", GEN, [P + "beruf", P + "amt", P + "organisation.regierung"], "sg"),
                 ("Arg2.1", "PARTNER", pp("mit", "dat", "con", "avec"), [P + "familie", P + "amt",
                                                                         P + "beruf.ausbildung"], "sg"),
                 ("Arg3.1", "THEMA", pp("über", "acc", "sobre", "sur"), ["abstrakt.intellektuell.thema",
                                                                         "abstrakt.ereignis"], "sg")],
    "Frage": [("Arg1.1", "AGENS", GEN, [P + "eigenschaft", P + "beruf.ausbildung", P + "urheber"], "sg"),
              ("Arg2.1", "THEMA", pp("nach", "dat", "sobre", "sur"), ["abstrakt.intellektuell.thema"], "sg")],
    "Video": [("Arg1.1", "AGENS", GEN, [P + "kollektiv", P + "urheber", P + "organisation.unternehmen"], "sg"),
              ("Arg2.1", "THEMA", pp("über", "acc", "sobre", "sur"), ["abstrakt.ereignis",
                                                                      "abstrakt.intellektuell.thema"], "sg")],
    "Tod": [("Arg1.1", "PATIENS", GEN, [P + "familie", P + "amt", P + "eigenname", "belebt.tierisch"], "sg")],
    "Zunahme": [("Arg1.1", "THEMA", GEN, ["abstrakt.menge", "abstrakt.zustand"], "sg")],
    "Liebe": [("Arg1.1", "EXPERIENCER", GEN, [P + "familie", P + "eigenname"], "sg"),
              ("Arg2.1", "STIMULUS", pp("für", "acc", "por", "pour"), ["ort.siedlung", P + "familie",
                                                                       "belebt.tierisch"], "sg")],
    "Geruch": [("Arg1.1", "QUELLE", pp("nach", "dat", "a", "de", article=False), ["materiell.nahrung",
                                                                                 "materiell.substanz"], "sg"),
               ("Arg1.2", "QUELLE", GEN, ["materiell.nahrung", "materiell.substanz", "materiell.natur"], "sg")],
    "Geschmack": [("Arg1.1", "QUELLE", GEN, ["materiell.nahrung", "materiell.substanz"], "sg"),
                  ("Arg1.2", "QUELLE", pp("nach", "dat", "a", "de", article=False), ["materiell.nahrung"], "sg")],
    "Breite": [("Arg1.1", "THEMA", GEN, ["ort.verkehr", "ort.gebäude", "materiell.gegenstand.fahrzeug"], "sg")],
}

# romance frames for the lemmas with a dedicated German frame
ROMANCE_EXTRA = {
    "Text": [("Arg1.1", "AGENS", GEN, [P + "beruf.ausbildung", P + "urheber", P + "organisation.regierung",
                                       P + "organisation.unternehmen", P + "familie"], "both"),
             ("Arg3.1", "THEMA", pp(None, None, "sobre", "sur"), ["abstrakt.intellektuell.thema",
                                                                  "abstrakt.ereignis"], "sg")],
    "Schmerz": [("Arg1.1", "EXPERIENCER", GEN, PERSONS, "sg"),
                ("Arg2.1", "LOKALISATION", pp(None, None, "de", "de", article=False), [P + "körperteil"], "sg")],
    "Diskussion": [("Arg1.1", "AGENS", GEN, [P + "organisation.regierung", P + "urheber", P + "eigenschaft"], "sg"),
                   ("Arg2.1", "THEMA", pp(None, None, "sobre", "sur"), ["abstrakt.intellektuell.thema"], "sg")],
    "Antwort": [("Arg1.1", "AGENS", GEN, [P + "organisation.regierung", P + "urheber"], "sg"),
                ("Arg2.1", "THEMA", pp(None, None, "a", "à"), ["abstrakt.intellektuell.kommunikation"], "sg")],
    "Farbe": [("Arg1.1", "TRÄGER", GEN, [P + "körperteil", "materiell.gegenstand.schönheitspflege",
                                         "materiell.natur"], "sg")],
}
BI = {"Flucht": ("Arg1.1", "Arg2.1"), "Aufenthalt": ("Arg1.1", "Arg2.1"), "Gespräch": ("Arg1.1", "Arg3.1"),
      "Text": ("Arg1.1", "Arg3.1"), "Antwort": ("Arg1.1", "Arg2.1"), "Diskussion": ("Arg1.1", "Arg2.1")}

NOISE = {"de": "Jahr", "es": "año", "fr": "an"}
HEAD_ADJ = {
    "de": ["neu", "lang", "plötzlich", "dauerhaft", "wichtig"],
    "es": ["largo", "breve", "importante", "nuevo"],
    "fr": ["long", "bref", "important", "nouveau"],
}
FILLER_ADJ = {"de": ["alt", "jung", "bekannt", "neu"], "es": ["conocido", "joven", "viejo", "nuevo"],
              "fr": ["connu", "jeune", "vieux", "nouveau"]}
GERUCH_ADJ = ["unangenehm", "angenehm", "übel", "intensiv"]
FOOD_ADJ = {"de": ["frisch", "süß", "bitter"], "es": ["intenso", "fuerte"], "fr": ["intense", "fort"]}


def build_generic(lang, lemma_de, lemma, gender, specs, tree, nouns, rng):
    slots = [slot(arg, role) for arg, role, _, _, _ in specs]
    pats = []
    cfg = {"lemma": lemma, "adjectives": GERUCH_ADJ if lemma == "Geruch" else HEAD_ADJ[lang], "slots": {}}
    key = fname(lemma)
    parts = {}
    for arg, role, preps, classes, number in specs:
        p, case, article = preps[lang]
        members = [m for m in members_of(tree, classes) if m in nouns]
        if len(members) < 2:
            raise SystemExit(f"{lang} {lemma} {arg}: too few members {members}")
        rng.shuffle(members)
        tag = "gen" if (lang == "de" and case == "gen") else fname(p)
        template = f"{lemma} die {{}}" if tag == "gen" else f"{lemma} {p} {{}}"
        rows = synthetic_rows(template, members, rng.randint(1800, 3600), 0.83, rng, noise=[(NOISE[lang], 3)])
        tfile = f"freq.{lang}.{key}_{fname(arg)}.tsv" if lang != "de" else f"freq.{key}_{tag}.tsv"
        if lang == "de" and tfile in TABLES:
            tfile = f"freq.{key}_{tag}_{fname(arg)}.tsv"
        TABLES[tfile] = table_text(lang, template, rows, "synthetic")
        afile = f"{lang}.{key}.{arg}.json"
        ANNOTATIONS[afile] = required(members, arg) + other([NOISE[lang]], "excluded", "temporal")
        fadj = FOOD_ADJ[lang] if "materiell.nahrung" in classes else FILLER_ADJ[lang]
        cfg["slots"][arg] = {"table": tfile, "annotations": f"annotations/{afile}", "adjectives": fadj}
        if number == "both":
            cfg["slots"][arg]["number"] = "both"
        x = letter(arg)
        # id tokens and slots of the argument part, with and without adjective
        if lang == "de":
            if case == "gen":
                parts[arg] = (["gen", f"N{x}G"], [det("gen"), fill(arg, "gen")],
                              ["gen", "adj", f"N{x}G"], [det("gen"), adj(), fill(arg, "gen")])
            elif article:
                c = CASE_LETTER[case]
                parts[arg] = ([p, "det", f"N{x}{c}"], [prep(p, case), det(), fill(arg)],
                              [p, "det", "adj", f"N{x}{c}"], [prep(p, case), det(), adj(), fill(arg)])
            else:
                c = CASE_LETTER[case]
                parts[arg] = ([p, f"N{x}{c}"], [prep(p, case), fill(arg)],
                              [p, "adj", f"N{x}{c}"], [prep(p, case), adj(), fill(arg)])
        else:
            if article:
                parts[arg] = ([p, "det", f"N{x}"], [prep(p), det(), fill(arg)],
                              [p, "det", f"N{x}", "adj"], [prep(p), det(), fill(arg), adj()])
            else:
                parts[arg] = ([p, f"N{x}"], [prep(p), fill(arg)],
                              [p, f"N{x}", "adj"], [prep(p), fill(arg), adj()])
    for arg, *_ in specs:
        ids, sl, ids_a, sl_a = parts[arg]
        if lang == "de":
            pats.append(pattern("+".join(["det", "adj", lemma] + ids_a), "", [det(), adj(), head()] + sl_a))
        else:
            pats.append(pattern("+".join(["det", lemma] + ids), "", [det(), head()] + sl))
            pats.append(pattern("+".join(["det", lemma, "adj"] + ids_a), "", [det(), head(), adj()] + sl_a))
    if lemma_de in BI:
        a, b = BI[lemma_de]
        ids = ["det", lemma] + parts[a][0] + parts[b][0]
        pats.append(pattern("+".join(ids), "", [det(), head()] + parts[a][1] + parts[b][1]))
    for pt in pats:
        pt["label"] = menu_label(lang, pt)
    ev = "synthetic"
    return frame(lemma, gender, scene_of(lemma), slots, pats, ev), cfg


def menu_label(lang, pt):
    out = []
    for s in pt["slots"]:
        k = s["kind"]
        if k == "determiner":
            c = s.get("marks", {}).get("case")
            out.append("determinante" + (f" {CASE_ES[c]}" if c in ("gen",) else ""))
        elif k == "adjective":
            out.append("adjetivo" if "binds" not in s else "actante A" + str(s["binds"]["index"]))
        elif k == "head":
            out.append("núcleo")
        elif k == "preposition":
            out.append(s["fixed_text"])
        else:
            out.append(f"actante N{s['binds']['index']}")
    return "+".join(out)


# ----------------------------------------------------------- Spanish, French

ES_NOUNS = """
huida f|viaje m|mudanza f|presencia f|ausencia f|estancia f|conversación f conversaciones|discusión f discusiones
pregunta f|respuesta f|texto m|video m|muerte f|aumento m|dolor m|amor m|olor m|sabor m|color m|anchura f
profesor m|profesora f|maestro m|maestra f|educador m|autor m|autora f|escritor m|poeta m|periodista m
gobierno m|ministerio m|ayuntamiento m|senado m|administración f administraciones|empresa f|editorial f
fábrica f|madre f|padre m|prima f|hermano m|Susana f|Patricia f|Carmen f|paciente m|alumno m|niño m
cabeza f|espalda f|estómago m|ojo m|pelo m|cuello m|muela f|rodilla f|piel f|consulta f|petición f peticiones
crítica f|demanda f|queja f|tema m|futuro m|problema m|sentido m|papel m|pintalabios m pintalabios|libro m
carta f|biblia f|guerra f|boda f|fiesta f|pan m|café m cafés|ajo m|cebolla f|humo m|gas m gases|cárcel f
casa f|escuela f|ciudad f|país m países|mar m|cielo m|hoja f|calle f|río m|coche m|tren m|temperatura f
precio m|violencia f|número m|enfermedad f|miedo m|tristeza f|perro m|gato m|año m|pared f|banda f|grupo m
coro m|policía f|ejército m|partido m|sindicato m|ministro m|alcalde m|universidad f|colegio m
"""

FR_NOUNS = """
fuite f|voyage m|déménagement m|présence f|absence f|séjour m|conversation f|discussion f|question f|réponse f
texte m|vidéo f|mort f|augmentation f|douleur f|amour m|odeur f|saveur f|couleur f|largeur f|enseignant m
enseignante f|professeur m|éducateur m|éducatrice f|auteur m|autrice f|écrivain m|poète m|journaliste m
gouvernement m|ministère m|mairie f|sénat m|administration f|entreprise f|éditeur m|usine f|mère f|père m
cousine f|frère m|Paulette f|Annick f|Claire f|patient m|élève m|enfant m|tête f|dos m dos|ventre m
œil m yeux|cheveu m cheveux|cou m|dent f|genou m genoux|peau f peaux|demande f|enquête f|critique f|requête f
plainte f|thème m|avenir m|problème m|sens m sens|rôle m|rouge-à-lèvres m rouges-à-lèvres|livre m|lettre f
bible f|guerre f|mariage m|fête f|pain m|café m|ail m aulx|oignon m|fumée f|gaz m gaz|prison f|maison f
école f|ville f|pays m pays|mer f|ciel m cieux|feuille f|rue f|fleuve m|voiture f|train m|température f
prix m prix|violence f|nombre m|maladie f|peur f|tristesse f|chien m|chat m|an m|mur m|groupe m|chorale f
police f|armée f|parti m|syndicat m|ministre m|maire m|université f|lycée m|orchestre m
"""

ROM_ONTOLOGY = {
    "es": {
        P + "beruf.ausbildung": ["profesor", "profesora", "maestro", "maestra", "educador"],
        P + "urheber": ["autor", "autora", "escritor", "poeta", "periodista"],
        P + "organisation.regierung": ["gobierno", "ministerio", "ayuntamiento", "senado", "administración"],
        P + "organisation.unternehmen": ["empresa", "editorial", "fábrica"],
        P + "organisation.politik": ["partido", "sindicato"],
        P + "organisation.militär": ["policía", "ejército"],
        P + "organisation.bildung": ["universidad", "colegio"],
        P + "familie": ["madre", "padre", "prima", "hermano"],
        P + "eigenname": ["Susana", "Patricia", "Carmen"],
        P + "eigenschaft": ["paciente", "alumno", "niño"],
        P + "kollektiv": ["banda", "grupo", "coro"],
        P + "amt": ["ministro", "alcalde"],
        P + "beruf": [],
        P + "körperteil.extern": ["cabeza", "espalda", "estómago", "ojo", "pelo", "cuello", "muela", "rodilla"],
        P + "körperteil.beschichtung": ["piel"],
        "belebt.tierisch": ["perro", "gato"],
        "abstrakt.intellektuell.kommunikation": ["pregunta", "consulta", "petición", "crítica", "demanda", "queja"],
        "abstrakt.intellektuell.thema": ["tema", "futuro", "problema", "sentido", "papel"],
        "abstrakt.ereignis": ["guerra", "boda", "fiesta"],
        "abstrakt.menge": ["temperatura", "precio", "violencia", "número"],
        "abstrakt.zustand": ["enfermedad"],
        "abstrakt.gefühl": ["miedo", "tristeza"],
        "materiell.gegenstand.schönheitspflege.kosmetik": ["pintalabios"],
        "materiell.gegenstand.fahrzeug": ["coche", "tren"],
        "materiell.schriftstück": ["libro", "carta", "biblia"],
        "materiell.nahrung": ["pan", "café", "ajo", "cebolla"],
        "materiell.substanz": ["humo", "gas"],
        "materiell.natur": ["mar", "cielo", "hoja", "pared"],
        "ort.gebäude": ["cárcel", "casa", "escuela"],
        "ort.siedlung": ["ciudad", "país"],
        "ort.verkehr": ["calle", "río"],
        "zeit": ["año"],
    },
    "fr": {
        P + "beruf.ausbildung": ["enseignant", "enseignante", "professeur", "éducateur", "éducatrice"],
        P + "urheber": ["auteur", "autrice", "écrivain", "poète", "journaliste"],
        P + "organisation.regierung": ["gouvernement", "ministère", "mairie", "sénat", "administration"],
        P + "organisation.unternehmen": ["entreprise", "éditeur", "usine"],
        P + "organisation.politik": ["parti", "syndicat"],
        P + "organisation.militär": ["police", "armée"],
        P + "organisation.bildung": ["université", "lycée"],
        P + "familie": ["mère", "père", "cousine", "frère"],
        P + "eigenname": ["Paulette", "Annick", "Claire"],
        P + "eigenschaft": ["patient", "élève", "enfant"],
        P + "kollektiv": ["groupe", "chorale", "orchestre"],
        P + "amt": ["ministre", "maire"],
        P + "beruf": [],
        P + "körperteil.extern": ["tête", "dos", "ventre", "œil", "cheveu", "cou", "dent", "genou"],
        P + "körperteil.beschichtung": ["peau"],
        "belebt.tierisch": ["chien", "chat"],
        "abstrakt.intellektuell.kommunikation": ["question", "demande", "enquête", "critique", "requête", "plainte"],
        "abstrakt.intellektuell.thema": ["thème", "avenir", "problème", "sens", "rôle"],
        "abstrakt.ereignis": ["guerre", "mariage", "fête"],
        "abstrakt.menge": ["température", "prix", "violence", "nombre"],
        "abstrakt.zustand": ["maladie"],
        "abstrakt.gefühl": ["peur", "tristesse"],
        "materiell.gegenstand.schönheitspflege.kosmetik": ["rouge-à-lèvres"],
        "materiell.gegenstand.fahrzeug": ["voiture", "train"],
        "materiell.schriftstück": ["livre", "lettre", "bible"],
        "materiell.nahrung": ["pain", "café", "ail", "oignon"],
        "materiell.substanz": ["fumée", "gaz"],
        "materiell.natur": ["mer", "ciel", "feuille", "mur"],
        "ort.gebäude": ["prison", "maison", "école"],
        "ort.siedlung": ["ville", "pays"],
        "ort.verkehr": ["rue", "fleuve"],
        "zeit": ["an"],
    },
}

ES_ADJ = {
    "conocido": None, "nuevo": None, "viejo": None, "joven": ("joven", "joven", "jóvenes", "jóvenes"),
    "largo": None, "breve": None, "importante": None, "intenso": None, "fuerte": None, "agradable": None,
    "crónico": None, "claro": None, "oficial": ("oficial", "oficial", "oficiales", "oficiales"),
    "difícil": ("difícil", "difícil", "difíciles", "difíciles"),
}
FR_ADJ = {
    "connu": None, "nouveau": ("nouveau", "nouvelle", "nouveaux", "nouvelles"),
    "vieux": ("vieux", "vieille", "vieux", "vieilles"), "jeune": None, "long": ("long", "longue", "longs", "longues"),
    "bref": ("bref", "brève", "brefs", "brèves"), "important": None, "intense": None, "fort": None,
    "agréable": None, "chronique": None, "clair": None, "officiel": ("officiel", "officielle", "officiels", "officielles"),
    "difficile": None,
}


def rom_plural(lang, lemma):
    if lang == "es":
        if lemma[-1] in "aeiouéó":
            return lemma + "s"
        return lemma + "es"
    if lemma[-1] in "sxz":
        return lemma
    if lemma.endswith("eau") or lemma.endswith("eu"):
        return lemma + "x"
    return lemma + "s"


def rom_nouns(lang, text):
    out = {}
    for item in text.replace("\n", "|").split("|"):
        item = item.strip()
        if not item:
            continue
        parts = item.split()
        lemma, g = parts[0], G[parts[1]]
        pl = parts[2] if len(parts) > 2 else rom_plural(lang, lemma)
        out[lemma] = {"id": lemma, "lemma": lemma.replace("-", " ") if lang == "fr" and "à" in lemma else lemma,
                      "pos": "noun", "gender": g, "forms": {"sg": lemma.replace("-", " ") if "à" in lemma else lemma,
                                                             "pl": pl.replace("-", " ") if "à" in pl else pl}}
    return out


def rom_adj(lang, lemma, forms):
    if forms is None:
        if lang == "es":
            if lemma.endswith("o"):
                st = lemma[:-1]
                forms = (lemma, st + "a", st + "os", st + "as")
            else:
                forms = (lemma, lemma, lemma + "s", lemma + "s")
        else:
            fem = lemma if lemma.endswith("e") else lemma + "e"
            forms = (lemma, fem, lemma + "s", fem + "s")
    keys = ["masc.sg", "fem.sg", "masc.pl", "fem.pl"]
    return {"id": lemma, "lemma": lemma, "pos": "adjective", "forms": dict(zip(keys, forms))}


# ------------------------------------------------------------------ vectors

def build_vectors(lang, entries, tree, cfgs, frames, seed):
    space = VectorSpace(50, seed)
    classes = {}
    for path, mem in tree.items():
        for m in mem:
            classes.setdefault(m, []).append(path)
    extra = {}
    for fr, cfg in zip(frames, cfgs):
        scene = "szene." + fr["scene"]
        extra.setdefault(fr["lemma"], []).append((scene, 1.6))
        for a in cfg["adjectives"]:
            extra.setdefault(a, []).append((scene, 1.0))
        for sc in cfg["slots"].values():
            ann = ANNOTATIONS[sc["annotations"].split("/", 1)[1]]
            lex = [x["filler"] for x in ann if x["verdict"] == "valency_required"]
            axes = set()
            for x in lex:
                for c in classes.get(x, []):
                    axes.add(".".join(c.split(".")[:2]))
            for a in sc.get("adjectives", []):
                for ax in sorted(axes):
                    extra.setdefault(a, []).append((ax, 1.0))
    vecs = {}
    for e in sorted(entries, key=lambda e: e["id"]):
        w = class_axes(classes.get(e["id"], [])) + sorted(set(extra.get(e["id"], [])))
        if not w:
            w = [("sonst." + e["id"], 1.0)]
        vecs[e["id"]] = space.vector(w)
    return vecs


def pin_similarity(vecs, a, b, target):
    """Rotate vecs[b] so that cos(a, b) == target exactly."""
    u = vecs[a] / np.linalg.norm(vecs[a])
    v = vecs[b] - np.dot(vecs[b], u) * u
    v /= np.linalg.norm(v)
    vecs[b] = target * u + math.sqrt(1 - target * target) * v


# ------------------------------------------------------------- toy corpus

def toy_corpus(rng):
    body = ["Kopf", "Rücken", "Bauch", "Nacken", "Zahn"]
    things = ["Lippenstift", "Kleid", "Himmel", "Wand"]
    people = ["Dozent", "Akademiker", "Erzieher", "Gastprofessor"]
    lines = []
    for _ in range(240):
        k = rng.random()
        if k < 0.4:
            lines.append(f"{rng.choice(['stark', 'heftig', 'chronisch'])} {rng.choice(body)} Schmerz seit Tagen")
        elif k < 0.7:
            lines.append(f"die Farbe rot {rng.choice(things)} {rng.choice(['hell', 'dunkel'])} glänzt")
        else:
            lines.append(f"der {rng.choice(people)} schreibt Text über {rng.choice(['Thema', 'Frage', 'Problem'])}")
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------------- main

def dump(path, obj):
    with open(path, "w", encoding="utf-8") as f:
        json.dump(obj, f, ensure_ascii=False, indent=1)
        f.write("\n")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default=os.path.join(os.path.dirname(__file__), "..", "fixtures"))
    args = ap.parse_args()
    out = os.path.abspath(args.out)
    os.makedirs(os.path.join(out, "annotations"), exist_ok=True)
    os.makedirs(os.path.join(out, "corpus"), exist_ok=True)
    rng = random.Random(20210)

    # de
    nouns = parse_de_nouns()
    adjs = {k: adj_de(k, v) for k, v in DE_ADJECTIVES.items()}
    frames, cfgs = [], []
    for build in (text_frame, schmerz_frame, diskussion_frame, antwort_frame, farbe_frame):
        f, c = build(rng)
        frames.append(f)
        cfgs.append(c)
    dedicated = {f["lemma"] for f in frames}
    for scene, (de, _, _) in SCENES.items():
        for lemma in de:
            if lemma in dedicated:
                continue
            f, c = build_generic("de", lemma, lemma, nouns[lemma]["gender"], GENERIC[lemma], DE_ONTOLOGY, nouns, rng)
            frames.append(f)
            cfgs.append(c)
    write_language(out, "de", nouns, adjs, frames, cfgs, DE_ONTOLOGY, LABELS_ES)

    # es, fr
    for idx, (lang, text, adj_table) in enumerate((("es", ES_NOUNS, ES_ADJ), ("fr", FR_NOUNS, FR_ADJ))):
        nouns = rom_nouns(lang, text)
        adjs = {k: rom_adj(lang, k, v) for k, v in adj_table.items()}
        tree = {}
        for path in ROM_ONTOLOGY[lang]:
            segs = path.split(".")
            for d in range(1, len(segs) + 1):
                tree.setdefault(".".join(segs[:d]), [])
        for path, mem in ROM_ONTOLOGY[lang].items():
            tree[path] = list(mem)
        frames, cfgs = [], []
        for scene, lemmas in SCENES.items():
            for de_lemma, lemma in zip(lemmas[0], lemmas[1 + idx]):
                specs = GENERIC.get(de_lemma) or ROMANCE_EXTRA[de_lemma]
                if de_lemma in ROMANCE_EXTRA:
                    specs = ROMANCE_EXTRA[de_lemma]
                f, c = build_generic(lang, de_lemma, lemma, nouns[lemma]["gender"], specs, tree, nouns, rng)
                frames.append(f)
                cfgs.append(c)
        write_language(out, lang, nouns, adjs, frames, cfgs, tree, LABELS_ES)

    for name, text in TABLES.items():
        with open(os.path.join(out, name), "w", encoding="utf-8") as f:
            f.write(text)
    for name, ann in ANNOTATIONS.items():
        dump(os.path.join(out, "annotations", name), ann)
    with open(os.path.join(out, "corpus", "toy.de.txt"), "w", encoding="utf-8") as f:
        f.write(toy_corpus(rng))
    print(f"wrote {len(TABLES)} tables, {len(ANNOTATIONS)} annotation files to {out}")


def write_language(out, lang, nouns, adjs, frames, cfgs, tree, labels):
    entries = list(nouns.values()) + list(adjs.values())
    ids = {e["id"] for e in entries}
    for path, mem in tree.items():
        for m in mem:
            assert m in ids, f"{lang}: ontology member {m} has no entry"
    for f in frames:
        assert f["inflection_ref"] in nouns, f"{lang}: head {f['lemma']} missing"
    for c in cfgs:
        for a in c["adjectives"] + [x for s in c["slots"].values() for x in s.get("adjectives", [])]:
            assert a in adjs, f"{lang}: adjective {a} missing"
    dump(os.path.join(out, f"lexicon.{lang}.json"),
         {"language": lang, "frames": frames, "entries": sorted(entries, key=lambda e: e["id"])})
    dump(os.path.join(out, f"ontology.{lang}.json"), ontology_doc(lang, tree, labels))
    dump(os.path.join(out, f"prototypes.{lang}.json"), {"language": lang, "frames": cfgs})
    vecs = build_vectors(lang, entries, tree, cfgs, frames, seed={"de": 7, "es": 11, "fr": 13}[lang])
    if lang == "de":
        pin_similarity(vecs, "Anfrage", "Bundesregierung", 0.6)
        pairs = [(a, b) for a in ["Bemerkung", "Lösung", "Antwort", "Erklärung", "Ankündigung", "Beschreibung"]
                 for b in ["Akademikerin", "Gastprofessor", "Englischlehrer", "Erzieher", "Englischlehrerin",
                           "Dozent", "Akademiker"]]
        low = [(a, b, round(cos(vecs[a], vecs[b]), 3)) for a, b in pairs if cos(vecs[a], vecs[b]) < 0.3]
        assert not low, f"compound/agent pairs too dissimilar: {low}"
    with open(os.path.join(out, f"vectors.{lang}.txt"), "w", encoding="utf-8") as f:
        f.write(vectors_text(vecs))


if __name__ == "__main__":
    main()
