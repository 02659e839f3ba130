#!/usr/bin/env python3
"""HTTP bridge between the static playground and the layout engine.

Serves the playground files and exposes the engine's resolve interface as
POST /api/resolve with body {"spec": <spec document>, "width": W,
"height": H, "anchor": "none"|"left"|"right"}, returning the canonical
resolved-layout document. Stateless: nothing is stored between requests.

    python3 bridge.py [--port 8787]
"""

from __future__ import annotations

import argparse
import json
from functools import partial
from http.server import SimpleHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path

from regui import ReguiError, WindowState, layout_to_doc, parse_spec, resolve

FRONTEND_DIR = Path(__file__).resolve().parent
REPO_ROOT = FRONTEND_DIR.parent


class BridgeHandler(SimpleHTTPRequestHandler):
    def do_POST(self):
        if self.path != "/api/resolve":
            self.send_error(404)
            return
        try:
            length = int(self.headers.get("content-length", "0"))
            request = json.loads(self.rfile.read(length))
            spec = parse_spec(json.dumps(request["spec"]))
            window = WindowState(float(request["width"]), float(request["height"]))
            anchor = request.get("anchor", "none")
            if anchor not in ("none", "left", "right"):
                raise ValueError(f"bad anchor {anchor!r}")
            doc = layout_to_doc(resolve(spec, window, anchor))
        except (ReguiError, KeyError, ValueError, json.JSONDecodeError) as exc:
            body = {"error": str(exc)}
            if hasattr(exc, "path"):
                body["path"] = exc.path
            self._reply(400, body)
            return
        self._reply(200, doc)

    def _reply(self, status: int, payload: dict):
        data = json.dumps(payload).encode("utf-8")
        self.send_response(status)
        self.send_header("content-type", "application/json")
        self.send_header("content-length", str(len(data)))
        self.end_headers()
        self.wfile.write(data)

    def translate_path(self, path):
        # /fixtures/* comes from the repo root so the bundled spec loads;
        # everything else (index.html, dist/) from the frontend directory.
        if path.startswith("/fixtures/"):
            return str(REPO_ROOT / path.lstrip("/"))
        return super().translate_path(path)

    def log_message(self, fmt, *args):  # quiet by default
        pass


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--port", type=int, default=8787)
    args = parser.parse_args()
    handler = partial(BridgeHandler, directory=str(FRONTEND_DIR))
    server = ThreadingHTTPServer(("127.0.0.1", args.port), handler)
    print(f"playground at http://127.0.0.1:{server.server_address[1]}/", flush=True)
    server.serve_forever()


if __name__ == "__main__":
    main()
