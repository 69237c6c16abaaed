// Entry point: mount the app against the query service.
//
// The API base defaults to the page origin; override with ?api=http://host:port
// when the UI is served separately from the service.

import { Client } from './api.js'
import { App } from './ui.js'

function apiBase(): string {
    const override = new URLSearchParams(window.location.search).get('api')
    if (override) return override
    return window.location.origin
}

async function boot(): Promise<void> {
    const app = new App(new Client(apiBase()))
    const mount = document.getElementById('app')
    if (!mount) throw new Error('missing #app mount point')
    try {
        await app.init()
        mount.replaceChildren(app.element)
    } catch (error) {
        mount.textContent = `failed to reach the query service: ${error}`
    }
}

void boot()
