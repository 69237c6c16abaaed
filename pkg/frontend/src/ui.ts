// DOM components for the point-to-point query flow: pick points from an
// importance-ordered listbox, press Go!, browse ranked paths per pair,
// press MORE for further results.

import { ApiError, Client, PathEntry, TypeEntry } from './api.js'
import { SessionView, validateNextPoint } from './state.js'

function el<K extends keyof HTMLElementTagNameMap>(
    tag: K, className?: string, text?: string): HTMLElementTagNameMap[K] {
    const node = document.createElement(tag)
    if (className) node.setAttribute('class', className)
    if (text !== undefined) node.textContent = text
    return node
}

export function formatEntry(entry: PathEntry): string {
    return `[${entry.badness}] ${entry.expression}`
}

export class PointPicker {
    public element: HTMLDivElement
    public select: HTMLSelectElement
    public addButton: HTMLButtonElement
    public onpick: (name: string) => void = () => undefined

    constructor(types: TypeEntry[]) {
        this.element = el('div', 'point-picker')
        this.select = el('select', 'point-picker-types')
        // server order is conceptual importance (cweight descending)
        for (const entry of types) {
            const option = el('option', undefined,
                `${entry.name} (${entry.cweight})`)
            option.value = entry.name
            this.select.appendChild(option)
        }
        this.addButton = el('button', 'point-picker-add', 'Add point')
        if (types.length === 0) {
            this.select.disabled = true
            this.addButton.disabled = true
        }
        this.addButton.addEventListener('click', () => {
            if (this.select.value) this.onpick(this.select.value)
        })
        this.element.appendChild(this.select)
        this.element.appendChild(this.addButton)
    }
}

export class QueryBar {
    public element: HTMLDivElement
    public pointsList: HTMLOListElement
    public goButton: HTMLButtonElement
    public errorBox: HTMLDivElement
    public points: string[] = []
    public ongo: (points: string[]) => void = () => undefined

    constructor() {
        this.element = el('div', 'query-bar')
        this.pointsList = el('ol', 'query-bar-points')
        this.goButton = el('button', 'query-bar-go', 'Go!')
        this.goButton.disabled = true
        this.errorBox = el('div', 'query-bar-error')
        this.goButton.addEventListener('click', () => {
            if (this.points.length >= 2) this.ongo([...this.points])
        })
        this.element.appendChild(this.pointsList)
        this.element.appendChild(this.goButton)
        this.element.appendChild(this.errorBox)
    }

    addPoint(name: string): boolean {
        const problem = validateNextPoint(this.points, name)
        if (problem !== null) {
            this.errorBox.textContent = problem
            return false
        }
        this.errorBox.textContent = ''
        this.points.push(name)
        this.pointsList.appendChild(el('li', 'query-bar-point', name))
        this.goButton.disabled = this.points.length < 2
        return true
    }

    showError(message: string): void {
        this.errorBox.textContent = message
    }

    reset(): void {
        this.points = []
        this.pointsList.replaceChildren()
        this.goButton.disabled = true
        this.errorBox.textContent = ''
    }
}

export class PairListbox {
    public element: HTMLDivElement
    public listbox: HTMLSelectElement
    public moreButton: HTMLButtonElement
    public statusBox: HTMLSpanElement
    public onmore: () => void = () => undefined
    public onselect: (index: number) => void = () => undefined

    constructor(start: string, goal: string) {
        this.element = el('div', 'pair-listbox')
        this.element.appendChild(
            el('h3', 'pair-listbox-title', `${start} → ${goal}`))
        this.listbox = el('select', 'pair-listbox-paths')
        this.listbox.size = 6
        this.listbox.addEventListener('change', () => {
            this.onselect(this.listbox.selectedIndex)
        })
        this.moreButton = el('button', 'pair-listbox-more', 'MORE')
        this.moreButton.addEventListener('click', () => this.onmore())
        this.statusBox = el('span', 'pair-listbox-status')
        this.element.appendChild(this.listbox)
        const controls = el('div', 'pair-listbox-controls')
        controls.appendChild(this.moreButton)
        controls.appendChild(this.statusBox)
        this.element.appendChild(controls)
    }

    // Append-only: existing <option> elements are never touched.
    append(entries: PathEntry[]): void {
        for (const entry of entries) {
            const option = el('option', 'pair-listbox-path', formatEntry(entry))
            option.value = entry.expression
            this.listbox.appendChild(option)
        }
        if (this.listbox.selectedIndex < 0 && this.listbox.options.length > 0) {
            this.listbox.selectedIndex = 0
        }
    }

    setExhausted(exhausted: boolean): void {
        this.moreButton.disabled = exhausted
        this.statusBox.textContent = exhausted ? 'exhausted' : ''
    }
}

export class App {
    public element: HTMLDivElement
    public picker: PointPicker | null = null
    public queryBar: QueryBar
    public listboxes: PairListbox[] = []
    public session: SessionView | null = null
    public noticeBox: HTMLDivElement
    private resultsBox: HTMLDivElement

    constructor(private client: Client) {
        this.element = el('div', 'ppq-app')
        this.queryBar = new QueryBar()
        this.noticeBox = el('div', 'ppq-notice')
        this.resultsBox = el('div', 'ppq-results')
    }

    async init(): Promise<void> {
        const listing = await this.client.getSchema()
        this.picker = new PointPicker(listing.object_types)
        this.picker.onpick = (name) => this.queryBar.addPoint(name)
        this.queryBar.ongo = (points) => {
            void this.startSession(points)
        }
        this.element.appendChild(this.picker.element)
        this.element.appendChild(this.queryBar.element)
        this.element.appendChild(this.noticeBox)
        this.element.appendChild(this.resultsBox)
    }

    async startSession(points: string[]): Promise<void> {
        try {
            const state = await this.client.createSession(points)
            this.session = new SessionView(state)
        } catch (error) {
            this.queryBar.showError(
                error instanceof ApiError ? error.message : String(error))
            return
        }
        this.noticeBox.textContent = ''
        this.resultsBox.replaceChildren()
        this.listboxes = []
        this.session.pairs.forEach((pair, index) => {
            const listbox = new PairListbox(pair.start, pair.goal)
            listbox.append(pair.entries)
            listbox.setExhausted(pair.exhausted)
            listbox.onmore = () => {
                void this.pressMore(index)
            }
            listbox.onselect = (entry) => this.session?.select(index, entry)
            this.listboxes.push(listbox)
            this.resultsBox.appendChild(listbox.element)
        })
    }

    async pressMore(pairIndex: number): Promise<void> {
        if (!this.session) return
        let result
        try {
            result = await this.client.more(this.session.sessionId, pairIndex)
        } catch (error) {
            if (error instanceof ApiError && error.status === 409) {
                // schema changed under the session; offer a restart
                this.noticeBox.textContent =
                    'schema recompiled: press Go! to start a fresh session'
                this.listboxes.forEach((box) => box.setExhausted(true))
                return
            }
            throw error
        }
        const fresh = this.session.applyMore(pairIndex, result)
        const listbox = this.listboxes[pairIndex]
        listbox.append(fresh)
        listbox.setExhausted(result.exhausted)
    }
}
