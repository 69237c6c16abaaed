// Client-side session view. Listboxes are append-only: entries already
// shown are never reordered or dropped, mirroring the server's monotone
// release contract.

import { MoreResult, PathEntry, SessionState } from './api.js'

export interface PairView {
    start: string
    goal: string
    entries: PathEntry[]
    exhausted: boolean
    selected: number
}

export class SessionView {
    readonly sessionId: string
    readonly points: string[]
    readonly cWeight: number
    readonly pairs: PairView[]

    constructor(state: SessionState) {
        this.sessionId = state.session_id
        this.points = [...state.points]
        this.cWeight = state.c_weight
        this.pairs = state.pairs.map((pair) => ({
            start: pair.start,
            goal: pair.goal,
            entries: [...pair.paths],
            exhausted: pair.exhausted,
            // the most likely path is preselected
            selected: pair.paths.length > 0 ? 0 : -1,
        }))
    }

    applyMore(pairIndex: number, result: MoreResult): PathEntry[] {
        const pair = this.pairs[pairIndex]
        if (!pair) throw new Error(`no pair at index ${pairIndex}`)
        for (const entry of result.new_paths) {
            const last = pair.entries[pair.entries.length - 1]
            if (last !== undefined && entry.badness < last.badness) {
                throw new Error('server released paths out of order')
            }
            pair.entries.push(entry)
        }
        pair.exhausted = result.exhausted
        if (pair.selected < 0 && pair.entries.length > 0) pair.selected = 0
        return result.new_paths
    }

    select(pairIndex: number, entryIndex: number): void {
        const pair = this.pairs[pairIndex]
        if (!pair) throw new Error(`no pair at index ${pairIndex}`)
        if (entryIndex < 0 || entryIndex >= pair.entries.length) {
            throw new Error(`no entry at index ${entryIndex}`)
        }
        pair.selected = entryIndex
    }
}

export function validateNextPoint(points: string[], next: string): string | null {
    if (next.trim() === '') return 'pick a type first'
    if (points.length > 0 && points[points.length - 1] === next) {
        return 'points must be distinct'
    }
    return null
}
