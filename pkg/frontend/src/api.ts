// Typed client for the schemapath HTTP/JSON API.

export interface TypeEntry {
    name: string
    cweight: number
}

export interface SchemaListing {
    schema_hash: string
    object_types: TypeEntry[]
    relationship_types: TypeEntry[]
}

export interface PathEntry {
    expression: string
    badness: number
    nodes: string[]
    labels: string[]
}

export interface PairState {
    start: string
    goal: string
    paths: PathEntry[]
    exhausted: boolean
}

export interface SessionState {
    session_id: string
    points: string[]
    c_weight: number
    pairs: PairState[]
}

export interface MoreResult {
    pair_index: number
    new_paths: PathEntry[]
    exhausted: boolean
}

export class ApiError extends Error {
    constructor(public status: number, message: string) {
        super(message)
        this.name = 'ApiError'
    }
}

async function parseError(response: Response): Promise<ApiError> {
    let detail = response.statusText
    try {
        const body = await response.json()
        if (typeof body.detail === 'string') detail = body.detail
    } catch {
        // keep the status text
    }
    return new ApiError(response.status, detail)
}

export class Client {
    constructor(private baseUrl: string) {
        this.baseUrl = baseUrl.replace(/\/+$/, '')
    }

    private async request<T>(path: string, init?: RequestInit): Promise<T> {
        const response = await fetch(this.baseUrl + path, {
            headers: { 'content-type': 'application/json' },
            ...init,
        })
        if (!response.ok) throw await parseError(response)
        if (response.status === 204) return undefined as T
        return (await response.json()) as T
    }

    getSchema(): Promise<SchemaListing> {
        return this.request<SchemaListing>('/schema')
    }

    createSession(points: string[], cWeight?: number | string): Promise<SessionState> {
        const body: Record<string, unknown> = { points }
        if (cWeight !== undefined) body.c_weight = cWeight
        return this.request<SessionState>('/sessions', {
            method: 'POST',
            body: JSON.stringify(body),
        })
    }

    getSession(sessionId: string): Promise<SessionState> {
        return this.request<SessionState>(`/sessions/${sessionId}`)
    }

    more(sessionId: string, pairIndex: number): Promise<MoreResult> {
        return this.request<MoreResult>(`/sessions/${sessionId}/more`, {
            method: 'POST',
            body: JSON.stringify({ pair_index: pairIndex }),
        })
    }

    deleteSession(sessionId: string): Promise<void> {
        return this.request<void>(`/sessions/${sessionId}`, { method: 'DELETE' })
    }
}
