#!/usr/bin/env python3
"""Regenerate the CSV/JSON/BibTeX fixture corpora under fixtures/.

The fixtures are committed; this script only exists so they can be rebuilt
deterministically after a schema change. Running it twice produces
byte-identical output.
"""

import csv
import json
import pathlib
import sys

ROOT = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "fixtures")

AUTHORS_HEADER = ["id", "name", "birth_year", "role"]
VENUES_HEADER = ["id", "name"]
PUBS_HEADER = [
    "id", "title", "year", "venue_id", "author_ids",
    "undergrad_coauthor", "feedback_registered",
]
CITES_HEADER = ["citing_id", "cited_id"]
FEEDBACK_HEADER = ["publication_id", "date", "recipient", "signatory"]
OUTREACH_HEADER = ["author_id", "date", "place", "description", "signatory"]


def write_csv(path, header, rows):
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def write_bundle(name, authors, venues, pubs, cites, feedback=(), outreach=()):
    base = ROOT / name
    write_csv(base / "authors.csv", AUTHORS_HEADER, authors)
    write_csv(base / "venues.csv", VENUES_HEADER, venues)
    write_csv(base / "publications.csv", PUBS_HEADER, pubs)
    write_csv(base / "citations.csv", CITES_HEADER, cites)
    write_csv(base / "feedback.csv", FEEDBACK_HEADER, feedback)
    write_csv(base / "outreach.csv", OUTREACH_HEADER, outreach)


def bool_str(value):
    return "true" if value else "false"


# ---- micro: 3 authors, 1 venue, 4 publications, 5 citations ---------------
def make_micro():
    authors = [
        ["a1", "Ada Lima", "1970", "researcher"],
        ["a2", "Ben Costa", "1980", "researcher"],
        ["a3", "Cam Rocha", "", "undergraduate"],
    ]
    venues = [["v1", "Journal One"]]
    pubs = [
        ["p1", "Alpha Study", "2014", "v1", "a1", "false", "false"],
        ["p2", "Beta Study", "2015", "v1", "a1;a3", "true", "false"],
        ["p3", "Gamma Study", "2015", "v1", "a2", "false", "false"],
        ["p4", "Delta Study", "2016", "v1", "a2", "false", "false"],
    ]
    cites = [
        ["p2", "p1"],
        ["p3", "p1"],
        ["p4", "p1"],
        ["p3", "p2"],
        ["p4", "p3"],
    ]
    write_bundle("micro", authors, venues, pubs, cites)

    # the same corpus as an independently written JSON document
    doc = {
        "authors": [
            {"id": "a1", "name": "Ada Lima", "birth_year": 1970, "role": "researcher"},
            {"id": "a2", "name": "Ben Costa", "birth_year": 1980, "role": "researcher"},
            {"id": "a3", "name": "Cam Rocha", "role": "undergraduate"},
        ],
        "venues": [{"id": "v1", "name": "Journal One"}],
        "publications": [
            {"id": p[0], "title": p[1], "year": int(p[2]), "venue_id": p[3],
             "author_ids": p[4].split(";"), "undergrad_coauthor": p[5] == "true",
             "feedback_registered": p[6] == "true"}
            for p in pubs
        ],
        "citations": [{"citing_id": c[0], "cited_id": c[1]} for c in cites],
        "feedback": [],
        "outreach": [],
    }
    (ROOT / "micro").mkdir(parents=True, exist_ok=True)
    (ROOT / "micro" / "corpus.json").write_text(json.dumps(doc, indent=2) + "\n",
                                                encoding="utf-8")


# ---- ingest12: exactly 12 records across all six kinds --------------------
def make_ingest12():
    authors = [
        ["i-a1", "Ana Silva", "1980", "researcher"],
        ["i-a2", "Bo Li", "", "undergraduate"],
    ]
    venues = [["i-v1", 'Data, Models & "Methods"']]
    pubs = [
        ["i-p1", "First Steps", "2015", "i-v1", "i-a1", "false", "true"],
        ["i-p2", "Second Wave", "2016", "i-v1", "i-a1;i-a2", "true", "false"],
        ["i-p3", "Third Round", "2017", "i-v1", "i-a1", "false", "false"],
    ]
    cites = [["i-p2", "i-p1"], ["i-p3", "i-p1"]]
    feedback = [
        ["i-p1", "2016-03-01", "Riverside Clinic", "M. Director"],
        ["i-p1", "2017-05-12", "City School", "Head Teacher"],
    ]
    outreach = [
        ["i-a1", "2016-06-10", "Town Hall", "Public lecture on findings", "Mayor Office"],
        ["i-a1", "2017-09-03", "Science Fair", "Demo booth", "Fair Board"],
    ]
    write_bundle("ingest12", authors, venues, pubs, cites, feedback, outreach)


# ---- profiles: worked author scenarios -------------------------------------
def make_profiles():
    authors = [
        ["alba-reis", "Alba Reis", "1975", "researcher"],
        ["ana-prado", "Ana Prado", "1964", "researcher"],
        ["breno-sousa", "Breno Sousa", "1978", "researcher"],
        ["bruno-melo", "Bruno Melo", "1986", "researcher"],
    ]
    venues = [["jv1", "Journal of Applied Studies"]]
    pubs = []
    feedback = []

    # 90 publications, 5 with undergraduate collaboration, author aged 53 in 2017
    for i in range(90):
        pubs.append([f"ana-p{i:02d}", f"Survey {i:02d}", str(1990 + i % 27), "jv1",
                     "ana-prado", bool_str(i < 5), "false"])
    # 40 publications, 15 with undergraduate collaboration, author aged 31 in 2017
    for i in range(40):
        pubs.append([f"bruno-p{i:02d}", f"Note {i:02d}", str(2008 + i % 9), "jv1",
                     "bruno-melo", bool_str(i < 15), "false"])
    # 10 publications, every one with registered feedback, no outreach
    for i in range(10):
        year = 2010 + i % 7
        pubs.append([f"alba-p{i:02d}", f"Field Report {i:02d}", str(year), "jv1",
                     "alba-reis", "false", "true"])
        feedback.append([f"alba-p{i:02d}", f"{year + 1}-06-15", "Study Site Office",
                         "Site Coordinator"])
    # 10 publications, 5 with feedback, 3 outreach actions
    for i in range(10):
        year = 2011 + i % 6
        flagged = i < 5
        pubs.append([f"breno-p{i:02d}", f"Case Study {i:02d}", str(year), "jv1",
                     "breno-sousa", "false", bool_str(flagged)])
        if flagged:
            feedback.append([f"breno-p{i:02d}", f"{year + 1}-09-01", "Partner School",
                             "Head of School"])
    outreach = [
        ["breno-sousa", "2015-05-20", "Community Center", "Open talk on findings",
         "Center Director"],
        ["breno-sousa", "2016-08-11", "Local Radio", "Interview on study results",
         "Station Manager"],
        ["breno-sousa", "2017-03-02", "Town Library", "Public reading group",
         "Head Librarian"],
    ]
    write_bundle("profiles", authors, venues, pubs, [], feedback, outreach)


# ---- collab: pairing-rule scenario with communities ------------------------
def make_collab():
    authors = [
        ["carla-dias", "Carla Dias", "", "researcher"],
        ["crowd-ann", "Ann Freire", "", "researcher"],
        ["crowd-ben", "Ben Hora", "", "researcher"],
        ["crowd-cyn", "Cyn Ilha", "", "researcher"],
        ["crowd-dev", "Dev Justo", "", "researcher"],
        ["jara-moura", "Jara Moura", "1989", "researcher"],
        ["julio-neri", "Julio Neri", "1990", "researcher"],
        ["selena-alves", "Selena Alves", "1970", "researcher"],
    ]
    venues = [["cv1", "Networks Review"]]
    pubs = []
    cites = []

    senior_ids = []
    for i in range(1, 41):
        pid = f"s{i:02d}"
        senior_ids.append(pid)
        author_ids = "selena-alves;carla-dias" if i <= 2 else "selena-alves"
        pubs.append([pid, f"Senior Work {i:02d}", str(2000 + i % 15), "cv1",
                     author_ids, "false", "false"])

    julio_ids = []
    for i in range(1, 5):
        pid = f"ja{i}"
        julio_ids.append(pid)
        pubs.append([pid, f"Junior Article {i}", "2015", "cv1", "julio-neri",
                     "false", "false"])
    jara_ids = []
    for i in range(1, 8):
        pid = f"jb{i}"
        jara_ids.append(pid)
        pubs.append([pid, f"Junior Brief {i}", "2015", "cv1", "jara-moura",
                     "false", "false"])
    pubs.append(["jj1", "Joint Junior Study", "2016", "cv1",
                 "julio-neri;jara-moura", "false", "false"])

    crowd = ["crowd-ann", "crowd-ben", "crowd-cyn", "crowd-dev"]
    for k in range(1, 41):
        pid = f"c{k:02d}"
        pair = f"{crowd[(k - 1) % 4]};{crowd[k % 4]}"
        pubs.append([pid, f"Crowd Commentary {k:02d}", "2018", "cv1", pair,
                     "false", "false"])
        for cited in senior_ids:
            cites.append([pid, cited])
        if k <= 4:
            for cited in julio_ids:
                cites.append([pid, cited])
        if k <= 7:
            for cited in jara_ids:
                cites.append([pid, cited])

    write_bundle("collab", authors, venues, pubs, cites)


# ---- window: citation-window semantics -------------------------------------
def make_window():
    authors = [
        ["owen-cedar", "Owen Cedar", "1955", "researcher"],
        ["uma-birch", "Uma Birch", "1970", "researcher"],
        ["will-ash", "Will Ash", "1960", "researcher"],
        ["xena-dale", "Xena Dale", "1980", "researcher"],
    ]
    venues = [
        ["v-cs", "Cite Journal"],
        ["v-if", "Impact Review"],
        ["v-old", "Archive Annals"],
        ["v-x", "Crosscite Letters"],
    ]
    pubs = []
    w_ids = []
    for i in range(1, 16):
        pid = f"w{i:02d}"
        w_ids.append(pid)
        year = "2016" if i <= 8 else "2015"
        pubs.append([pid, f"Impact Piece {i:02d}", year, "v-if", "will-ash",
                     "false", "false"])
    u_years = {"u1": "2016", "u2": "2016", "u3": "2015", "u4": "2015",
               "u5": "2014", "u6": "2014"}
    for pid, year in u_years.items():
        pubs.append([pid, f"Cite Piece {pid[1]}", year, "v-cs", "uma-birch",
                     "false", "false"])
    pubs.append(["o1", "Archive Item 1", "2014", "v-old", "owen-cedar", "false", "false"])
    pubs.append(["o2", "Archive Item 2", "2014", "v-old", "owen-cedar", "false", "false"])
    for i in range(1, 5):
        pubs.append([f"k{i}", f"Crosscite Note {i}", "2017", "v-x", "xena-dale",
                     "false", "false"])

    cites = []
    for pid in w_ids:
        cites.append(["k1", pid])
        cites.append(["k2", pid])
    for pid in ["u1", "u2", "u3", "u4", "u5", "u6"]:
        cites.append(["k3", pid])
    for pid in ["u1", "u2", "u5"]:
        cites.append(["k4", pid])
    cites.append(["k4", "o1"])

    write_bundle("window", authors, venues, pubs, cites)


BIBTEX = """Reference list used by the importer tests; entries below follow the
supported subset (articles and conference papers).

@article{silva2015models,
  title = {Collaborative {Bibliometric} Models},
  year = {2015},
  journal = {Journal of Data Studies},
  author = {Ana Silva and Bo Li},
  note = {hand-checked reference}
}

@inproceedings{li2016networks,
  title = "Coauthorship Networks at Scale",
  year = 2016,
  booktitle = {Metrics Workshop Proceedings},
  author = {Bo Li}
}

@book{mills2017book,
  title = {A Whole Book},
  year = {2017},
  publisher = {Nowhere Press},
  author = {Carol Mills}
}
"""


def make_bibtex():
    base = ROOT / "bibtex"
    base.mkdir(parents=True, exist_ok=True)
    (base / "sample.bib").write_text(BIBTEX, encoding="utf-8")


def main():
    make_micro()
    make_ingest12()
    make_profiles()
    make_collab()
    make_window()
    make_bibtex()
    print(f"fixtures written under {ROOT}/")


if __name__ == "__main__":
    main()
