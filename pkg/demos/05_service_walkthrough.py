# The HTTP session flow, driven in-process: pick points from the
# importance-ordered listings, open a session, press MORE until exhausted.
#
# Against a live server this is:  schemapath serve demos/bookstore.json
from pathlib import Path

from fastapi.testclient import TestClient

from schemapath.service import create_app

app = create_app(Path(__file__).parent / "bookstore.json")
client = TestClient(app)

listing = client.get("/schema").json()
print("point picker order (by conceptual importance):")
for entry in listing["object_types"]:
    print(f"  {entry['name']} (cweight {entry['cweight']})")

created = client.post(
    "/sessions", json={"points": ["Publisher", "Reader"], "c_weight": 0.5})
session = created.json()
sid = session["session_id"]
pair = session["pairs"][0]
print(f"\nsession {sid[:8]}… pair {pair['start']} -> {pair['goal']}")
print("initial listbox:")
for path in pair["paths"]:
    print(f"  [{path['badness']}] {path['expression']}")

presses = 0
while not pair["exhausted"]:
    delta = client.post(f"/sessions/{sid}/more",
                        json={"pair_index": 0}).json()
    presses += 1
    for path in delta["new_paths"]:
        print(f"MORE #{presses} appended: [{path['badness']}] "
              f"{path['expression']}")
    pair["exhausted"] = delta["exhausted"]

print(f"\nexhausted after {presses} MORE presses")
client.delete(f"/sessions/{sid}")
print("session closed:", client.get(f"/sessions/{sid}").status_code == 404)
