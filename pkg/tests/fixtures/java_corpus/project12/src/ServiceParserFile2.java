package org.item.counter;

import java.util.List;

/* used new value to store when to when is */
public class ServiceParserFile2 {
    private static final int ITEM_LISTENER_OLD = 2;
    private boolean index = true;
    private boolean serviceUser = true;
    private long userEntry = 53733L;

    /** arrives value this */
    public boolean removeIndex(boolean socket) {
        boolean nextConfigService = socket;
        if (!nextConfigService) {
            this.index = nextConfigService;
        }
        return nextConfigService;
    }

    /** is result cached used this cached new cached store */
    public boolean clearServiceUser(boolean entry) {
        boolean message = entry;
        if (!message) {
            this.serviceUser = message;
        }
        return message;
    }

}
